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

#include "lcq/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "lcq/error.hpp"
#include "lcq/simd/kernels.hpp"

namespace lcq {

void QuantizerSpec::validate() const {
  require(std::isfinite(delta) && delta > 0.0, "QuantizerSpec", "delta > 0");
  require(threshold_offset >= 0.0 && threshold_offset < 1.0, "QuantizerSpec",
          "threshold_offset in [0, 1)");
}

std::int64_t QuantizerSpec::cell_of(double v) const noexcept {
  // The quotient can round across a threshold; settle against the products.
  double c = std::floor(v / delta - threshold_offset);
  if ((c + 1.0 + threshold_offset) * delta <= v) c += 1.0;
  if ((c + threshold_offset) * delta > v) c -= 1.0;
  return static_cast<std::int64_t>(c);
}

double quantize_value(const QuantizerSpec& q, double v) {
  return q.level(q.cell_of(v));
}

std::int64_t initial_cell(const QuantizerSpec& q, const SinusoidSpec& s) {
  const double x0 = eval(s, 0.0);
  std::int64_t cell = q.cell_of(x0);
  if (x0 == q.lower_threshold(cell) && s.amplitude > 0.0) {
    const double w0 = eval_derivative(s, 0.0);
    const bool leaving_down = w0 < 0.0 || (w0 == 0.0 && std::sin(s.phase) > 0.0);
    if (leaving_down) --cell;
  }
  return cell;
}

namespace {

// Events beyond this are a configuration mistake rather than a workload.
constexpr double kMaxEvents = 2e8;

}  // namespace

EventTrain crossing_events(const QuantizerSpec& q, const SinusoidSpec& s, double t_end) {
  q.validate();
  s.validate();
  require(std::isfinite(t_end) && t_end > 0.0, "crossing_events", "t_end > 0");
  if (s.amplitude == 0.0) {
    const double u = s.dc / q.delta - q.threshold_offset;
    require(std::floor(u) != u, "crossing_events",
            "a constant input that does not sit on a threshold");
    return {};
  }

  const double lo = s.dc - s.amplitude;
  const double hi = s.dc + s.amplitude;
  std::int64_t k = q.cell_of(lo);
  while (q.lower_threshold(k) <= lo) ++k;

  const double n_thresholds = std::floor((hi - lo) / q.delta) + 1.0;
  require(n_thresholds * 2.0 * (t_end * s.frequency_hz + 1.0) < kMaxEvents, "crossing_events",
          "fewer than 2e8 crossings");

  const double omega = s.angular_frequency();
  const double two_pi = kTwoPi;
  std::vector<std::pair<double, double>> events;
  for (;; ++k) {
    const double theta = q.lower_threshold(k);
    if (theta >= hi) break;
    const double ratio = (theta - s.dc) / s.amplitude;
    if (std::abs(ratio) >= 1.0) continue;  // tangency
    const double alpha = std::asin(ratio);
    // sin rises through `ratio` at α and falls through it at π − α
    const std::pair<double, double> branches[] = {{alpha, q.delta},
                                                  {std::numbers::pi - alpha, -q.delta}};
    for (const auto& [base, weight] : branches) {
      double m = std::ceil((s.phase - base) / two_pi);
      for (;; m += 1.0) {
        const double t = (base + two_pi * m - s.phase) / omega;
        if (t <= 0.0) continue;
        if (t > t_end) break;
        events.emplace_back(t, weight);
      }
    }
  }
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  EventTrain train;
  train.times.reserve(events.size());
  train.weights.reserve(events.size());
  for (const auto& [t, w] : events) train.push_back(t, w);
  return train;
}

StepWaveform quantize_waveform(const QuantizerSpec& q, const SinusoidSpec& s,
                               std::span<const double> grid) {
  q.validate();
  s.validate();
  require_strictly_increasing(grid, "quantize_waveform");
  StepWaveform out;
  out.times.assign(grid.begin(), grid.end());
  out.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = eval(s, grid[i]);
  simd::quantize(out.values, out.values, q.delta, q.threshold_offset);
  return out;
}

}  // namespace lcq
