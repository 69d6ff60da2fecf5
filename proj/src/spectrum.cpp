// Copyright 2026 The lcquant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcq/spectrum.hpp"

#include <cmath>
#include <limits>

#include "lcq/error.hpp"
#include "lcq/fft.hpp"
#include "lcq/simd/kernels.hpp"
#include "lcq/waveform.hpp"

namespace lcq {

int SpectrumResult::max_harmonic() const noexcept {
  if (bins.empty() || periods < 1) return 0;
  const std::size_t nyquist = bins.size() / 2;
  return static_cast<int>((nyquist - 1) / static_cast<std::size_t>(periods));
}

SpectrumResult coherent_spectrum_of(std::span<const double> samples, double fx, int periods) {
  require(std::isfinite(fx) && fx > 0.0, "coherent_spectrum", "fx > 0");
  require(periods >= 1, "coherent_spectrum", "an integer number of periods >= 1");
  require(is_power_of_two(samples.size()), "coherent_spectrum", "N a power of two");
  require(samples.size() % static_cast<std::size_t>(periods) == 0, "coherent_spectrum",
          "periods dividing N, so that fs/fx is an integer");
  require(samples.size() >= 4 * static_cast<std::size_t>(periods), "coherent_spectrum",
          "N/periods >= 4 so the fundamental sits below Nyquist");
  SpectrumResult out;
  out.fx = fx;
  out.periods = periods;
  out.sample_rate_hz = static_cast<double>(samples.size()) * fx / periods;
  out.bins = dft_real(samples);
  return out;
}

SpectrumResult coherent_spectrum(const SinusoidSpec& s, const QuantizerSpec& q, int periods,
                                 std::size_t n) {
  s.validate();
  q.validate();
  require(is_power_of_two(n), "coherent_spectrum", "N a power of two");
  require(periods >= 1, "coherent_spectrum", "an integer number of periods >= 1");
  require(n % static_cast<std::size_t>(periods) == 0, "coherent_spectrum",
          "periods dividing N, so that fs/fx is an integer");
  // Sample at the phase reduced to one period so that every period of the
  // record is bit-identical and non-harmonic bins are exactly zero.
  const double period = s.period();
  const double dn = static_cast<double>(n);
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t m = (k * static_cast<std::size_t>(periods)) % n;
    x[k] = eval(s, period * (static_cast<double>(m) / dn));
  }
  std::vector<double> y(n);
  simd::quantize(x, y, q.delta, q.threshold_offset);
  return coherent_spectrum_of(y, s.frequency_hz, periods);
}

namespace {

void check_harmonic_range(const SpectrumResult& spectrum, int r_max) {
  require(r_max >= 0, "harmonic_amplitudes", "r_max >= 0");
  require(r_max <= spectrum.max_harmonic(), "harmonic_amplitudes",
          "r·fx below Nyquist for every requested harmonic");
}

}  // namespace

HarmonicTable harmonic_amplitudes(const SpectrumResult& spectrum, int r_max) {
  check_harmonic_range(spectrum, r_max);
  HarmonicTable t;
  t.fx = spectrum.fx;
  t.coefficients.resize(static_cast<std::size_t>(r_max));
  const double scale = 2.0 / static_cast<double>(spectrum.size());
  for (int r = 1; r <= r_max; ++r) {
    const auto& bin = spectrum.bins[static_cast<std::size_t>(r) * spectrum.periods];
    t.coefficients[static_cast<std::size_t>(r - 1)] = -scale * bin.imag();
  }
  return t;
}

std::vector<double> harmonic_magnitudes(const SpectrumResult& spectrum, int r_max) {
  check_harmonic_range(spectrum, r_max);
  std::vector<double> out(static_cast<std::size_t>(r_max));
  const double scale = 2.0 / static_cast<double>(spectrum.size());
  for (int r = 1; r <= r_max; ++r) {
    out[static_cast<std::size_t>(r - 1)] =
        scale * std::abs(spectrum.bins[static_cast<std::size_t>(r) * spectrum.periods]);
  }
  return out;
}

double spectrum_mean_square(const SpectrumResult& spectrum) {
  std::vector<double> mag2(spectrum.size());
  for (std::size_t k = 0; k < mag2.size(); ++k) mag2[k] = std::abs(spectrum.bins[k]);
  const double n = static_cast<double>(spectrum.size());
  return simd::sum_squares(mag2) / (n * n);
}

bool ErrorPower::infinite_sqnr() const noexcept { return std::isinf(sqnr_db) && sqnr_db > 0; }

ErrorPower error_power_and_sqnr(const HarmonicTable& measured, double amplitude,
                                std::optional<double> analytical_c1) {
  std::vector<double> tail;
  if (measured.r_max() > 1) tail.assign(measured.coefficients.begin() + 1, measured.coefficients.end());
  double power = 0.5 * simd::sum_squares(tail);
  if (analytical_c1) power += 0.5 * *analytical_c1 * *analytical_c1;
  ErrorPower out;
  out.error_power = power;
  out.sqnr_db = power > 0.0 ? 10.0 * std::log10(0.5 * amplitude * amplitude / power)
                            : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace lcq
