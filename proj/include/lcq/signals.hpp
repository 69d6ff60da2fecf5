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

#include <numbers>

namespace lcq {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Test input x(t) = dc + A·sin(2π·f·t + phase), in quantizer units.
struct SinusoidSpec {
  double amplitude = 0.0;
  double frequency_hz = 1.0;
  double dc = 0.0;
  double phase = 0.0;

  /// Peak of the derivative, B = 2π·f·A.
  double derivative_amplitude() const noexcept {
    return kTwoPi * frequency_hz * amplitude;
  }
  double angular_frequency() const noexcept { return kTwoPi * frequency_hz; }
  double period() const noexcept { return 1.0 / frequency_hz; }

  /// Throws PreconditionError unless f > 0, A ≥ 0 and all fields are finite.
  void validate() const;

  friend bool operator==(const SinusoidSpec&, const SinusoidSpec&) = default;
};

double eval(const SinusoidSpec& s, double t) noexcept;
double eval_derivative(const SinusoidSpec& s, double t) noexcept;

/// Closed-form ∫_{t0}^{t1} x(τ) dτ. Requires t1 ≥ t0.
double integral_between(const SinusoidSpec& s, double t0, double t1);

}  // namespace lcq
