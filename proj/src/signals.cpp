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

#include "lcq/signals.hpp"

#include <cmath>

#include "lcq/error.hpp"

namespace lcq {

void SinusoidSpec::validate() const {
  require(std::isfinite(amplitude) && std::isfinite(frequency_hz) && std::isfinite(dc) &&
              std::isfinite(phase),
          "SinusoidSpec", "finite fields");
  require(frequency_hz > 0.0, "SinusoidSpec", "frequency_hz > 0");
  require(amplitude >= 0.0, "SinusoidSpec", "amplitude >= 0");
}

double eval(const SinusoidSpec& s, double t) noexcept {
  return s.dc + s.amplitude * std::sin(s.angular_frequency() * t + s.phase);
}

double eval_derivative(const SinusoidSpec& s, double t) noexcept {
  return s.derivative_amplitude() * std::cos(s.angular_frequency() * t + s.phase);
}

double integral_between(const SinusoidSpec& s, double t0, double t1) {
  require(t1 >= t0, "integral_between", "t1 >= t0");
  const double w = s.angular_frequency();
  // cos(a) − cos(b) = 2·sin((a+b)/2)·sin((b−a)/2), exact as t1 → t0
  const double mid = 0.5 * w * (t0 + t1) + s.phase;
  const double half = 0.5 * w * (t1 - t0);
  return s.dc * (t1 - t0) + (s.amplitude / w) * 2.0 * std::sin(mid) * std::sin(half);
}

}  // namespace lcq
