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

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lcq/quantizer.hpp"
#include "lcq/series.hpp"
#include "lcq/signals.hpp"

namespace lcq {

/// DFT of a record spanning an exact integer number of signal periods, so
/// harmonic r of fx lands on bin r·periods. Bins are unnormalized.
struct SpectrumResult {
  double fx = 1.0;
  int periods = 1;
  double sample_rate_hz = 0.0;
  std::vector<std::complex<double>> bins;

  std::size_t size() const noexcept { return bins.size(); }
  double bin_frequency(std::size_t k) const noexcept {
    return static_cast<double>(k) * sample_rate_hz / static_cast<double>(bins.size());
  }
  /// Highest harmonic of fx strictly below Nyquist.
  int max_harmonic() const noexcept;
};

/// Samples y_q on the coherent grid (rectangular window) and transforms.
SpectrumResult coherent_spectrum(const SinusoidSpec& s, const QuantizerSpec& q, int periods,
                                 std::size_t n);

/// Same for an arbitrary record already sampled on coherent_grid(fx, periods, N).
SpectrumResult coherent_spectrum_of(std::span<const double> samples, double fx, int periods);

/// One-sided sine amplitudes c_r = −2·Im(X_{r·periods})/N for r = 1..r_max.
HarmonicTable harmonic_amplitudes(const SpectrumResult& spectrum, int r_max);

/// One-sided magnitudes 2|X_{r·periods}|/N for r = 1..r_max.
std::vector<double> harmonic_magnitudes(const SpectrumResult& spectrum, int r_max);

/// Σ|X_k|²/N², which equals the mean square of the record (Parseval).
double spectrum_mean_square(const SpectrumResult& spectrum);

struct ErrorPower {
  double error_power = 0.0;
  /// +∞ when error_power is zero.
  double sqnr_db = 0.0;

  bool infinite_sqnr() const noexcept;
};

/// Error power Σ_{r≥2} c_r²/2 (+ c_1²/2 when the analytical c_1 is supplied;
/// a measurement cannot separate it from the tone) and
/// SQNR = 10·log10((A²/2)/error_power).
ErrorPower error_power_and_sqnr(const HarmonicTable& measured, double amplitude,
                                std::optional<double> analytical_c1 = std::nullopt);

}  // namespace lcq
