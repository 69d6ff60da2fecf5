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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "lcq/bessel.hpp"
#include "lcq/compare.hpp"
#include "lcq/pfm.hpp"
#include "lcq/quantizer.hpp"
#include "lcq/series.hpp"
#include "lcq/simd/kernels.hpp"
#include "lcq/spectrum.hpp"

using namespace lcq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool report(const char* id, const char* title, double budget_s, Outcome (*run)()) {
  const auto t0 = Clock::now();
  const Outcome o = run();
  const double elapsed = seconds_since(t0);
  const bool in_time = elapsed < budget_s;
  const bool ok = o.passed && in_time;
  std::printf("%s %s  %s; %.2f s (budget %.0f s)%s\n", id, ok ? "PASS" : "FAIL", title,
              elapsed, budget_s, in_time ? "" : " OVER BUDGET");
  std::printf("   %s\n", o.detail.c_str());
  std::fflush(stdout);
  return ok;
}

const QuantizerSpec kMidTread{1.0, 0.5};

Outcome c1() {
  const SinusoidSpec s{5.0, 0.002, 0.0, 0.0};
  const double period = s.period();
  const std::size_t n = 100000;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = period * static_cast<double>(i) / static_cast<double>(n);

  const EventTrain e = encode_bipolar(bipolar_config_for(kMidTread, s), s, period);
  const StepWaveform yp = integrate_events(e, bipolar_initial_level(kMidTread, s), grid);
  const StepWaveform yq = quantize_waveform(kMidTread, s, grid);
  std::size_t compared = 0;
  std::size_t mismatched = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool near = false;
    for (double t : e.times) near = near || std::abs(t - grid[i]) <= 1e-9;
    if (near) continue;
    ++compared;
    mismatched += yp.values[i] != yq.values[i];
  }
  const auto ref = oracle::arcsin_crossings(5.0, 0.002, 1.0);
  double worst = ref.size() == e.size() ? 0.0 : INFINITY;
  for (std::size_t k = 0; k < std::min(ref.size(), e.size()); ++k) {
    worst = std::max(worst, std::abs(e.times[k] - ref[k].time));
    if (e.weights[k] != ref[k].direction) worst = INFINITY;
  }
  Outcome o;
  o.passed = mismatched == 0 && compared > 0 && worst <= 1e-9;
  o.detail = std::to_string(e.size()) + " events vs " + std::to_string(ref.size()) +
             " arcsin crossings, max time error " + fmt("%.3g s", worst) + "; " +
             std::to_string(mismatched) + " of " + std::to_string(compared) +
             " grid points differ";
  return o;
}

Outcome c2() {
  const SinusoidSpec s{5.0, 0.002, 0.0, 0.0};
  const HarmonicTable t = error_coefficients(5.0, kMidTread, {50, 1000}, s.frequency_hz);
  const WaveformCheck w = check_reconstruction(s, kMidTread, t, std::size_t{1} << 20);
  Outcome o;
  o.passed = w.passed && w.crossings == 20;
  o.detail = std::to_string(w.crossings) + " crossings, RMS outside windows " +
             fmt("%.4g", w.rms_outside) + " (< 0.05), max overshoot " +
             fmt("%.4g", w.max_overshoot) + " (> 0.05)";
  return o;
}

Outcome c3() {
  const SinusoidSpec s{512.0, 0.002, 0.0, 0.0};
  const SpectrumResult spec = coherent_spectrum(s, kMidTread, 1, std::size_t{1} << 20);
  const std::vector<double> measured = harmonic_magnitudes(spec, 1000);
  const HarmonicTable analytical = error_coefficients(512.0, kMidTread, {50, 1000}, s.frequency_hz);
  const SpectralCheck c = compare_harmonics(measured, analytical, 512.0, {-100.0, 1.0, 2});
  Outcome o;
  o.passed = c.passed && c.included > 0;
  o.detail = std::to_string(c.included) + " harmonics above -100 dBc, max |delta| " +
             fmt("%.4g dB", c.max_abs_delta_db) + " at r = " + std::to_string(c.worst_harmonic) +
             " (<= 1 dB)";
  return o;
}

Outcome c4() {
  const double a = 512.0;
  const TruncationSpec band = TruncationSpec::full_band(a, 1.0, 50);
  const HarmonicTable c = error_coefficients(a, kMidTread, band);
  long double series_power = 0.0L;
  for (double v : c.coefficients) series_power += 0.5L * v * v;
  const double p = static_cast<double>(series_power);
  const double mse = oracle::time_domain_mse(a, 1.0, std::size_t{1} << 22);
  const double classical = 1.0 / 12.0;
  std::vector<double> tail(c.coefficients.begin() + 1, c.coefficients.end());
  const double tail_power = 0.5 * simd::sum_squares(tail);
  const double sqnr = 10.0 * std::log10(0.5 * a * a / tail_power);

  // The table truncated at 1000 harmonics, for the record.
  const HarmonicTable short_table = error_coefficients(a, kMidTread, {50, 1000});
  double short_power = 0.0;
  for (double v : short_table.coefficients) short_power += 0.5 * v * v;

  const double rel_mse = std::abs(p - mse) / mse;
  const double rel_classical = std::abs(p - classical) / classical;
  Outcome o;
  o.passed = rel_mse < 0.02 && rel_classical < 0.05 && std::abs(sqnr - 61.96) <= 0.5;
  o.detail = "sum c^2/2 = " + fmt("%.6g", p) + " over r <= " + std::to_string(band.r_max) +
             "; time-domain MSE " + fmt("%.6g", mse) + " (" + fmt("%.2f%%", 100 * rel_mse) +
             "), 1/12 (" + fmt("%.2f%%", 100 * rel_classical) + "); SQNR " +
             fmt("%.3f dB", sqnr) + "; r <= 1000 alone gives " + fmt("%.4g", short_power);
  return o;
}

Outcome c5() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_ratio = 0.0;
  double worst_spread = 0.0;
  int regime_count[4] = {0, 0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    double x = 0.0;
    int n = static_cast<int>(1200.0 * u(rng));
    switch (i % 5) {
      case 0: x = 12.0 * u(rng); n = static_cast<int>(80.0 * u(rng)); break;
      case 1: x = 12.0 + (std::max(30.0, 1.5 * n) - 12.0) * u(rng); break;
      case 2: x = 30.0 + 2000.0 * u(rng); n = static_cast<int>(std::sqrt(x / 8.0) * u(rng)); break;
      case 3: x = 1.7e5 * u(rng); break;
      default: x = 1.2e5 + 0.5e5 * u(rng); n = static_cast<int>(std::sqrt(x / 8.0) * u(rng)); break;
    }
    if (i == 0) x = 0.0;
    if (i == 199) { x = 1.7e5; n = 1200; }
    ++regime_count[static_cast<int>(detail::bessel_regime(n, x))];
    double spread = 0.0;
    const double ref = oracle::bessel_quadrature(n, x, &spread);
    worst_spread = std::max(worst_spread, spread);
    const double tol = 1e-8 * std::max(1.0, std::sqrt(2.0 / (std::numbers::pi * x)));
    worst_ratio = std::max(worst_ratio, std::abs(bessel_j(n, x) - ref) / tol);
  }
  double worst_defect = 0.0;
  for (double x : {1.0, 10.0, 1e3, 1.6e5}) {
    const int top = static_cast<int>(std::ceil(x + 40.0 * std::cbrt(x))) + 1;
    const BesselRow row = bessel_j_row(top, x);
    long double s = static_cast<long double>(row.at(0)) * row.at(0);
    for (int r = 1; r <= top; ++r) s += 2.0L * row.at(r) * row.at(r);
    worst_defect = std::max(worst_defect, std::abs(static_cast<double>(s) - 1.0));
  }
  const bool all_regimes = regime_count[1] > 0 && regime_count[2] > 0 && regime_count[3] > 0;
  Outcome o;
  o.passed = worst_ratio < 1.0 && worst_defect < 1e-10 && all_regimes && worst_spread < 1e-12;
  o.detail = "200 points (series " + std::to_string(regime_count[1]) + ", recurrence " +
             std::to_string(regime_count[2]) + ", asymptotic " + std::to_string(regime_count[3]) +
             ", zero " + std::to_string(regime_count[0]) + "), worst error/tolerance " +
             fmt("%.3g", worst_ratio) + "; normalization defect " + fmt("%.3g", worst_defect) +
             " (< 1e-10)";
  return o;
}

Outcome c6() {
  const SinusoidSpec constant{0.0, 1.0, 2.0, 0.0};
  const PfmConfig cfg{1.0, 0.0};
  const EventTrain e = encode_unipolar(cfg, constant, 1000.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const double expect = 0.5 * static_cast<double>(k + 1);
    worst = std::max(worst, std::abs(e.times[k] - expect) / expect);
  }
  const double f0 = rest_frequency(cfg, 2.0);
  Outcome o;
  o.passed = e.size() == 2000 && worst < 1e-12 && f0 == 2.0;
  o.detail = std::to_string(e.size()) + " events, worst relative time error " +
             fmt("%.3g", worst) + "; rest frequency " + fmt("%.17g", f0);
  return o;
}

Outcome c7() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_scale = 0.0;
  double worst_fx = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = 0.5 + 60.0 * u(rng);
    const double delta = std::pow(10.0, 2.0 * u(rng) - 1.0);
    const double k = std::pow(10.0, 4.0 * u(rng) - 2.0);
    const double fx = std::pow(10.0, 8.0 * u(rng) - 4.0);
    const TruncationSpec trunc{25, 600};
    const HarmonicTable base = error_coefficients(a, QuantizerSpec{delta, 0.5}, trunc);
    const HarmonicTable scaled = error_coefficients(k * a, QuantizerSpec{k * delta, 0.5}, trunc);
    const HarmonicTable moved = error_coefficients(a, QuantizerSpec{delta, 0.5}, trunc, fx);
    double peak = 0.0;
    for (double c : base.coefficients) peak = std::max(peak, std::abs(c));
    for (int r = 1; r <= trunc.r_max; ++r) {
      worst_scale = std::max(worst_scale, std::abs(scaled.at(r) - k * base.at(r)) / (k * peak));
      worst_fx = std::max(worst_fx, std::abs(moved.at(r) - base.at(r)) / peak);
    }
  }
  Outcome o;
  o.passed = worst_scale <= 1e-12 && worst_fx <= 1e-12;
  o.detail = "20 draws, worst scale deviation " + fmt("%.3g", worst_scale) +
             ", worst fx deviation " + fmt("%.3g", worst_fx) + " (relative to table peak)";
  return o;
}

}  // namespace

int main() {
  std::printf("kernel backend: %s\n",
              std::string(simd::backend_name(simd::active_backend())).c_str());
  bool ok = true;
  ok &= report("C1", "quantizer and bipolar PFM agree", 1.0, c1);
  ok &= report("C2", "series reconstructs the quantized waveform", 30.0, c2);
  ok &= report("C3", "measured and analytical spectra agree", 120.0, c3);
  ok &= report("C4", "error power", 120.0, c4);
  ok &= report("C5", "Bessel accuracy", 60.0, c5);
  ok &= report("C6", "unipolar PFM with constant input", 10.0, c6);
  ok &= report("C7", "scale and frequency invariance", 60.0, c7);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
