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

#include "lcq/pfm.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "lcq/error.hpp"
#include "root_solve.hpp"

namespace lcq {

void PfmConfig::validate() const {
  require(std::isfinite(delta) && delta > 0.0, "PfmConfig", "delta > 0");
  require(integrator_initial >= 0.0 && integrator_initial <= delta, "PfmConfig",
          "integrator_initial in [0, delta]");
}

namespace {

constexpr double kMaxEvents = 2e8;

// True when x(t) > 0 on (a, b].
bool positive_on(const SinusoidSpec& s, double a, double b) {
  const double xa = eval(s, a);
  if (xa < 0.0 || (xa == 0.0 && eval_derivative(s, a) <= 0.0)) return false;
  if (eval(s, b) <= 0.0) return false;
  if (s.amplitude == 0.0) return s.dc > 0.0;
  // any minimum (phase 3π/2 mod 2π) inside (a, b]?
  const double w = s.angular_frequency();
  const double pa = w * a + s.phase - 1.5 * std::numbers::pi;
  const double pb = w * b + s.phase - 1.5 * std::numbers::pi;
  const bool has_min = std::floor(pb / kTwoPi) >= std::floor(pa / kTwoPi) + 1.0;
  return !has_min || s.dc - s.amplitude > 0.0;
}

}  // namespace

EventTrain encode_unipolar(const PfmConfig& cfg, const SinusoidSpec& input, double t_end) {
  cfg.validate();
  input.validate();
  require(cfg.integrator_initial < cfg.delta, "encode_unipolar", "integrator_initial < delta");
  require(std::isfinite(t_end) && t_end > 0.0, "encode_unipolar", "t_end > 0");
  require(positive_on(input, 0.0, t_end), "encode_unipolar", "input > 0 on (0, t_end]");

  const double total = integral_between(input, 0.0, t_end);
  require((total + cfg.integrator_initial) / cfg.delta < kMaxEvents, "encode_unipolar",
          "fewer than 2e8 events");

  auto area = [&](double t) { return integral_between(input, 0.0, t); };
  auto rate = [&](double t) { return eval(input, t); };

  EventTrain train;
  double t_prev = 0.0;
  for (std::int64_t k = 1;; ++k) {
    // cumulative targets keep the error from drifting with k
    const double target = static_cast<double>(k) * cfg.delta - cfg.integrator_initial;
    if (target > total) break;
    const double t = detail::solve_bracketed([&](double t) { return area(t) - target; }, rate,
                                             t_prev, t_end, area(t_prev) - target,
                                             total - target);
    train.push_back(t, cfg.delta);
    t_prev = t;
  }
  return train;
}

EventTrain encode_bipolar(const PfmConfig& cfg, const SinusoidSpec& signal, double t_end) {
  cfg.validate();
  signal.validate();
  require(std::isfinite(t_end) && t_end > 0.0, "encode_bipolar", "t_end > 0");
  EventTrain train;
  if (signal.amplitude == 0.0) return train;  // w ≡ 0 never accumulates
  require((2.0 * signal.amplitude / cfg.delta + 1.0) * 2.0 *
                  (t_end * signal.frequency_hz + 1.0) <
              kMaxEvents,
          "encode_bipolar", "fewer than 2e8 events");

  const double delta = cfg.delta;
  const double w = signal.angular_frequency();
  const double pi = std::numbers::pi;
  // u(t) = integrator_initial + (x(t) − x(0)) − n·Δ; the integrator reaches Δ
  // when x = base + (n+1)Δ and falls below 0 when x crosses base + nΔ.
  const double base = eval(signal, 0.0) - cfg.integrator_initial;
  std::int64_t n = 0;

  auto x = [&](double t) { return eval(signal, t); };
  auto dx = [&](double t) { return eval_derivative(signal, t); };

  // monotone pieces between extrema of x, at phase π/2 + jπ
  double j = std::floor((signal.phase - 0.5 * pi) / pi) + 1.0;
  double a = 0.0;
  double xa = x(0.0);
  while (a < t_end) {
    double b = (0.5 * pi + j * pi - signal.phase) / w;
    while (b <= a) {
      j += 1.0;
      b = (0.5 * pi + j * pi - signal.phase) / w;
    }
    bool b_extremum = true;
    double xb = 0.0;
    const bool rising = std::fmod(std::abs(j), 2.0) == 0.0;  // even j ends at a maximum
    if (b >= t_end) {
      b = t_end;
      b_extremum = false;
      xb = x(b);
    } else {
      xb = rising ? signal.dc + signal.amplitude : signal.dc - signal.amplitude;
    }

    double cur_t = a;
    double cur_x = xa;
    for (;;) {
      if (rising) {
        const double target = base + static_cast<double>(n + 1) * delta;
        const bool fires = target < xb || (target == xb && !b_extremum);
        if (!fires || cur_x >= target) break;
        const double t = detail::solve_bracketed([&](double t) { return x(t) - target; }, dx,
                                                 cur_t, b, cur_x - target, xb - target);
        train.push_back(t, delta);
        ++n;
        cur_t = t;
        cur_x = target;
      } else {
        const double target = base + static_cast<double>(n) * delta;
        const bool fires = xb < target || (xb == target && !b_extremum);
        if (!fires || cur_x < target) break;
        const double t = detail::solve_bracketed([&](double t) { return target - x(t); },
                                                 [&](double t) { return -dx(t); }, cur_t, b,
                                                 target - cur_x, target - xb);
        train.push_back(t, -delta);
        --n;
        cur_t = t;
        cur_x = target;
      }
    }
    a = b;
    xa = xb;
    j += 1.0;
  }
  return train;
}

StepWaveform integrate_events(const EventTrain& train, double initial_level,
                              std::span<const double> grid) {
  require_strictly_increasing(grid, "integrate_events");
  require(train.times.size() == train.weights.size(), "integrate_events",
          "matching times and weights");
  StepWaveform out;
  out.times.assign(grid.begin(), grid.end());
  out.values.resize(grid.size());
  double level = initial_level;
  std::size_t k = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // u(0) = 1: an event at exactly t counts
    while (k < train.size() && train.times[k] <= grid[i]) level += train.weights[k++];
    out.values[i] = level;
  }
  return out;
}

double rest_frequency(const PfmConfig& cfg, double v_m) {
  cfg.validate();
  require(v_m >= 0.0, "rest_frequency", "v_m >= 0");
  return v_m / cfg.delta;
}

PfmConfig bipolar_config_for(const QuantizerSpec& q, const SinusoidSpec& s) {
  q.validate();
  const std::int64_t cell = initial_cell(q, s);
  double u0 = eval(s, 0.0) - q.lower_threshold(cell);
  if (u0 < 0.0) u0 = 0.0;
  if (u0 > q.delta) u0 = q.delta;
  return {q.delta, u0};
}

double bipolar_initial_level(const QuantizerSpec& q, const SinusoidSpec& s) {
  return q.level(initial_cell(q, s));
}

}  // namespace lcq
