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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lcq/error.hpp"
#include "lcq/signals.hpp"
#include "oracles.hpp"

using namespace lcq;

namespace {
const SinusoidSpec kDemo{5.0, 0.002, 0.0, 0.0};
}

TEST_CASE("eval at known phases") {
  CHECK(eval(kDemo, 125.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(eval(kDemo, 0.0) == 0.0);
  const double root = oracle::bisect([](double t) { return 5.0 * std::sin(kTwoPi * 0.002 * t) - 0.5; },
                                     0.0, 100.0);
  CHECK(std::abs(root - 7.9715) < 1e-3);
  CHECK(std::abs(eval(kDemo, 7.9715) - 0.5) < 1e-3);
  CHECK(std::abs(eval(kDemo, root) - 0.5) < 1e-12);
}

TEST_CASE("eval includes dc and phase") {
  const SinusoidSpec s{2.0, 1.0, 0.25, std::numbers::pi / 2};
  CHECK(eval(s, 0.0) == doctest::Approx(2.25));
  CHECK(eval_derivative(s, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("derivative examples") {
  CHECK(eval_derivative(kDemo, 0.0) == doctest::Approx(0.06283185307179587).epsilon(1e-14));
  CHECK(std::abs(eval_derivative(kDemo, 125.0)) < 1e-12);
  const SinusoidSpec zero{0.0, 3.0, 1.5, 0.0};
  CHECK(eval_derivative(zero, 0.37) == 0.0);
  CHECK(kDemo.derivative_amplitude() == doctest::Approx(kTwoPi * 0.002 * 5.0));
}

TEST_CASE("integral examples") {
  CHECK(std::abs(integral_between(kDemo, 0.0, 500.0)) < 1e-9);
  const SinusoidSpec constant{0.0, 0.002, 2.0, 0.0};
  CHECK(integral_between(constant, 0.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  const double quarter = integral_between(kDemo, 0.0, 125.0);
  const double oracle_value =
      oracle::simpson_adaptive([](double t) { return 5.0 * std::sin(kTwoPi * 0.002 * t); }, 0.0,
                               125.0, 1e-11);
  CHECK(std::abs(quarter - oracle_value) < 1e-6);
  CHECK(std::abs(quarter - 5.0 / (kTwoPi * 0.002)) < 1e-6);
  CHECK(integral_between(kDemo, 3.0, 3.0) == 0.0);
}

TEST_CASE("integral rejects reversed bounds") {
  CHECK_THROWS_AS(integral_between(kDemo, 2.0, 1.0), PreconditionError);
}

TEST_CASE("validate rejects bad specs") {
  CHECK_THROWS_AS((SinusoidSpec{1.0, 0.0, 0.0, 0.0}.validate()), PreconditionError);
  CHECK_THROWS_AS((SinusoidSpec{1.0, -1.0, 0.0, 0.0}.validate()), PreconditionError);
  CHECK_THROWS_AS((SinusoidSpec{-1.0, 1.0, 0.0, 0.0}.validate()), PreconditionError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS((SinusoidSpec{1.0, 1.0, nan, 0.0}.validate()), PreconditionError);
  CHECK_NOTHROW(kDemo.validate());
}

TEST_CASE("property: derivative agrees with central differences") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> amp(0.0, 1000.0), lf(-4.0, 2.0), u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const SinusoidSpec s{amp(rng), std::pow(10.0, lf(rng)), 10.0 * (u(rng) - 0.5),
                         kTwoPi * u(rng)};
    const double t = 5.0 * s.period() * u(rng);
    const double h = 1e-6 * s.period();
    const double fd = (eval(s, t + h) - eval(s, t - h)) / (2.0 * h);
    CHECK(std::abs(eval_derivative(s, t) - fd) <= 1e-6 * std::max(s.derivative_amplitude(), 1e-300));
  }
}

TEST_CASE("property: integral is additive over adjacent intervals") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> amp(0.0, 1000.0), lf(-4.0, 2.0), u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const SinusoidSpec s{amp(rng), std::pow(10.0, lf(rng)), 10.0 * (u(rng) - 0.5),
                         kTwoPi * u(rng)};
    double a = 3.0 * s.period() * u(rng);
    double b = 3.0 * s.period() * u(rng);
    double c = 3.0 * s.period() * u(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const double whole = integral_between(s, a, c);
    const double parts = integral_between(s, a, b) + integral_between(s, b, c);
    const double scale = std::abs(s.dc) * (c - a) + s.amplitude / s.angular_frequency();
    CHECK(std::abs(whole - parts) <= 1e-12 * std::max(scale, 1e-300));
  }
}
