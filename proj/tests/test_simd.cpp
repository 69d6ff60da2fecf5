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
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include "lcq/fft.hpp"
#include "lcq/series.hpp"
#include "lcq/simd/kernels.hpp"

using namespace lcq;
using simd::Backend;

namespace {

std::vector<Backend> vector_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (simd::backend_available(b)) out.push_back(b);
  }
  return out;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

// Restores the process-wide backend on scope exit.
struct BackendGuard {
  Backend saved = simd::active_backend();
  ~BackendGuard() { simd::set_active_backend(saved); }
};

}  // namespace

TEST_CASE("backend registry") {
  CHECK(simd::backend_available(Backend::kScalar));
  CHECK(simd::backend_name(Backend::kScalar) == "scalar");
  CHECK(simd::backend_name(Backend::kAvx2) == "avx2");
  CHECK(simd::backend_name(Backend::kNeon) == "neon");
  CHECK(simd::backend_available(simd::active_backend()));
  for (Backend b : {Backend::kAvx2, Backend::kNeon}) {
    if (!simd::backend_available(b)) {
      BackendGuard guard;
      CHECK_THROWS_AS(simd::set_active_backend(b), std::invalid_argument);
    }
  }
  MESSAGE("active backend: " << simd::backend_name(simd::active_backend()));
}

TEST_CASE("quantize kernels are bit-identical") {
  std::mt19937_64 rng(71);
  const auto& ref = simd::kernels(Backend::kScalar);
  for (Backend b : vector_backends()) {
    const auto& k = simd::kernels(b);
    for (std::size_t n = 0; n < 70; ++n) {
      for (double offset : {0.0, 0.5}) {
        std::vector<double> in = random_values(rng, n, 40.0);
        for (std::size_t i = 0; i < n; i += 3) in[i] = std::round(in[i]) + offset;  // ties
        std::vector<double> a(n), c(n);
        ref.quantize(in.data(), a.data(), n, 0.75, offset);
        k.quantize(in.data(), c.data(), n, 0.75, offset);
        CHECK(same_bits(a, c));
      }
    }
  }
}

TEST_CASE("compensated accumulation kernels are bit-identical") {
  std::mt19937_64 rng(73);
  const auto& ref = simd::kernels(Backend::kScalar);
  for (Backend b : vector_backends()) {
    const auto& k = simd::kernels(b);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 256u, 1001u}) {
      std::vector<double> s1(n, 0.0), c1(n, 0.0), s2(n, 0.0), c2(n, 0.0);
      for (int pass = 0; pass < 30; ++pass) {
        const std::vector<double> x = random_values(rng, n, std::pow(10.0, pass % 7));
        const double w = (pass & 1) ? -0.3 : 1.7;
        ref.compensated_axpy(s1.data(), c1.data(), x.data(), n, w);
        k.compensated_axpy(s2.data(), c2.data(), x.data(), n, w);
      }
      CHECK(same_bits(s1, s2));
      CHECK(same_bits(c1, c2));
    }
  }
}

TEST_CASE("sine series kernels are bit-identical") {
  std::mt19937_64 rng(79);
  const auto& ref = simd::kernels(Backend::kScalar);
  for (Backend b : vector_backends()) {
    const auto& k = simd::kernels(b);
    for (std::size_t m : {0u, 1u, 2u, 9u, 500u}) {
      for (std::size_t n : {0u, 1u, 4u, 7u, 64u, 101u}) {
        const std::vector<double> c = random_values(rng, m, 1.0);
        std::vector<double> theta = random_values(rng, n, 3.2);
        std::vector<double> a(n), d(n);
        ref.sine_series(c.data(), m, theta.data(), a.data(), n);
        k.sine_series(c.data(), m, theta.data(), d.data(), n);
        CHECK(same_bits(a, d));
      }
    }
  }
}

TEST_CASE("sine series kernel evaluates the series") {
  const std::vector<double> c{0.5, -0.25, 0.125};
  for (double th : {0.0, 0.3, 1.9, 3.0, -2.2}) {
    double out = 0.0;
    simd::kernels(Backend::kScalar).sine_series(c.data(), 3, &th, &out, 1);
    const double expect = 0.5 * std::sin(th) - 0.25 * std::sin(2 * th) + 0.125 * std::sin(3 * th);
    CHECK(out == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("butterfly kernels are bit-identical") {
  std::mt19937_64 rng(83);
  const auto& ref = simd::kernels(Backend::kScalar);
  for (Backend b : vector_backends()) {
    const auto& k = simd::kernels(b);
    for (std::size_t n : {2u, 4u, 8u, 16u, 64u, 1024u}) {
      for (std::size_t half = 1; half < n; half *= 2) {
        std::vector<double> re = random_values(rng, n, 5.0), im = random_values(rng, n, 5.0);
        const std::vector<double> wr = random_values(rng, half, 1.0), wi = random_values(rng, half, 1.0);
        std::vector<double> re2 = re, im2 = im;
        ref.butterfly_stage(re.data(), im.data(), n, half, wr.data(), wi.data());
        k.butterfly_stage(re2.data(), im2.data(), n, half, wr.data(), wi.data());
        CHECK(same_bits(re, re2));
        CHECK(same_bits(im, im2));
      }
    }
  }
}

TEST_CASE("sum of squares kernels agree to rounding") {
  std::mt19937_64 rng(89);
  for (Backend b : vector_backends()) {
    for (std::size_t n : {0u, 1u, 3u, 8u, 9u, 1000u, 65537u}) {
      const std::vector<double> x = random_values(rng, n, 3.0);
      const double a = simd::kernels(Backend::kScalar).sum_squares(x.data(), n);
      const double c = simd::kernels(b).sum_squares(x.data(), n);
      CHECK(c == doctest::Approx(a).epsilon(1e-13));
    }
  }
}

TEST_CASE("library results do not depend on the backend") {
  BackendGuard guard;
  simd::set_active_backend(Backend::kScalar);
  std::mt19937_64 rng(97);
  const std::vector<double> x = random_values(rng, 1 << 12, 2.0);
  const auto fft_ref = dft_real(x);
  const HarmonicTable coef_ref = error_coefficients(37.0, QuantizerSpec{1.0, 0.5}, {40, 600});
  const std::vector<double> times = random_values(rng, 257, 100.0);
  const std::vector<double> wave_ref = error_waveform(coef_ref, times);
  for (Backend b : vector_backends()) {
    simd::set_active_backend(b);
    const auto fft_b = dft_real(x);
    CHECK(std::memcmp(fft_b.data(), fft_ref.data(), fft_b.size() * sizeof(fft_b[0])) == 0);
    CHECK(same_bits(error_coefficients(37.0, QuantizerSpec{1.0, 0.5}, {40, 600}).coefficients,
                    coef_ref.coefficients));
    CHECK(same_bits(error_waveform(coef_ref, times), wave_ref));
  }
}
