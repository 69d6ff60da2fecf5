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

#include "lcq/compare.hpp"

#include <algorithm>
#include <cmath>

#include "lcq/error.hpp"
#include "lcq/quantizer.hpp"
#include "lcq/waveform.hpp"

namespace lcq {

double amplitude_db(double amplitude, double reference) noexcept {
  const double a = std::abs(amplitude);
  if (a == 0.0 || reference <= 0.0) return kDbFloorClamp;
  return std::max(kDbFloorClamp, 20.0 * std::log10(a / reference));
}

SpectralCheck compare_harmonics(std::span<const double> measured_magnitudes,
                                const HarmonicTable& analytical, double carrier,
                                const SpectralCheckOptions& options) {
  require(carrier > 0.0, "compare_harmonics", "carrier amplitude > 0");
  require(options.r_min >= 1, "compare_harmonics", "r_min >= 1");
  SpectralCheck out;
  out.options = options;
  const int top = std::min(static_cast<int>(measured_magnitudes.size()), analytical.r_max());
  for (int r = options.r_min; r <= top; ++r) {
    HarmonicComparison row;
    row.r = r;
    row.measured_db = amplitude_db(measured_magnitudes[static_cast<std::size_t>(r - 1)], carrier);
    row.analytical_db = amplitude_db(analytical.at(r), carrier);
    row.delta_db = row.measured_db - row.analytical_db;
    row.included = row.analytical_db > options.floor_dbc;
    if (row.included) {
      ++out.included;
      if (std::abs(row.delta_db) > out.max_abs_delta_db || out.worst_harmonic == 0) {
        out.max_abs_delta_db = std::abs(row.delta_db);
        out.worst_harmonic = r;
      }
    }
    out.rows.push_back(row);
  }
  out.passed = out.max_abs_delta_db <= options.tolerance_db;
  return out;
}

WaveformCheck check_reconstruction(const SinusoidSpec& s, const QuantizerSpec& q,
                                   const HarmonicTable& table, std::size_t n,
                                   const WaveformCheckOptions& options) {
  s.validate();
  q.validate();
  require(s.dc == 0.0 && s.phase == 0.0, "check_reconstruction",
          "a zero-mean, zero-phase sinusoid");
  require(n >= 2, "check_reconstruction", "n >= 2");
  require(options.window_fraction >= 0.0 && options.window_fraction < 0.5,
          "check_reconstruction", "window_fraction in [0, 0.5)");

  HarmonicTable at_fx = table;
  at_fx.fx = s.frequency_hz;
  const double period = s.period();
  const std::vector<double> grid = coherent_grid(s.frequency_hz, 1, n);
  const StepWaveform y = quantize_waveform(q, s, grid);
  const std::vector<double> e = error_waveform(at_fx, grid);
  std::vector<double> rec(n);
  for (std::size_t i = 0; i < n; ++i) rec[i] = eval(s, grid[i]) + e[i];

  const EventTrain crossings = s.amplitude > 0.0 ? crossing_events(q, s, period) : EventTrain{};
  WaveformCheck out;
  out.crossings = crossings.size();

  std::vector<char> in_window(n, 0);
  const double half_width = options.window_fraction * period;
  const double dn = static_cast<double>(n);
  for (double tc : crossings.times) {
    const auto first = static_cast<long long>(std::floor((tc - half_width) / period * dn)) - 1;
    const auto last = static_cast<long long>(std::ceil((tc + half_width) / period * dn)) + 1;
    double lo = INFINITY;
    double hi = -INFINITY;
    std::vector<std::size_t> members;
    for (long long k = first; k <= last; ++k) {
      const auto i = static_cast<std::size_t>(((k % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                              static_cast<long long>(n));
      double d = std::abs(grid[i] - tc);
      d = std::min(d, period - d);
      if (d > half_width) continue;
      in_window[i] = 1;
      members.push_back(i);
      lo = std::min(lo, y.values[i]);
      hi = std::max(hi, y.values[i]);
    }
    for (std::size_t i : members) {
      out.max_overshoot = std::max({out.max_overshoot, rec[i] - hi, lo - rec[i]});
    }
  }

  double sum_sq = 0.0;
  std::size_t outside = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_window[i]) continue;
    const double d = rec[i] - y.values[i];
    sum_sq += d * d;
    ++outside;
  }
  out.coverage = 1.0 - static_cast<double>(outside) / dn;
  out.rms_outside = outside > 0 ? std::sqrt(sum_sq / static_cast<double>(outside)) : 0.0;
  const bool rms_ok = outside > 0 && out.rms_outside < options.rms_tolerance * q.delta;
  const bool rings = out.crossings == 0 || out.max_overshoot > options.min_overshoot * q.delta;
  out.passed = rms_ok && rings;
  return out;
}

}  // namespace lcq
