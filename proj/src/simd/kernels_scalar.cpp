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

// Reference kernels. The SIMD variants must reproduce these bit for bit
// (except sum_squares, which reassociates).

#include <cmath>

#include "lcq/simd/kernels.hpp"

namespace lcq::simd::scalar {
namespace {

void quantize(const double* in, double* out, std::size_t n, double delta, double offset) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = in[i];
    double c = std::floor(v / delta - offset);
    if ((c + 1.0 + offset) * delta <= v) c += 1.0;
    if ((c + offset) * delta > v) c -= 1.0;
    out[i] = (c + offset + 0.5) * delta;
  }
}

void compensated_axpy(double* sum, double* comp, const double* x, std::size_t n, double weight) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = weight * x[i];
    const double s = sum[i];
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      comp[i] += (s - t) + v;
    } else {
      comp[i] += (v - t) + s;
    }
    sum[i] = t;
  }
}

void sine_series(const double* c, std::size_t m, const double* theta, double* out,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double two_cos = 2.0 * std::cos(theta[i]);
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t r = m; r-- > 0;) {
      const double b0 = c[r] + (two_cos * b1 - b2);
      b2 = b1;
      b1 = b0;
    }
    out[i] = b1 * std::sin(theta[i]);
  }
}

void butterfly_stage(double* re, double* im, std::size_t n, std::size_t half, const double* wr,
                     const double* wi) {
  for (std::size_t start = 0; start < n; start += 2 * half) {
    double* ar = re + start;
    double* ai = im + start;
    double* br = ar + half;
    double* bi = ai + half;
    for (std::size_t j = 0; j < half; ++j) {
      const double tr = wr[j] * br[j] - wi[j] * bi[j];
      const double ti = wr[j] * bi[j] + wi[j] * br[j];
      br[j] = ar[j] - tr;
      bi[j] = ai[j] - ti;
      ar[j] = ar[j] + tr;
      ai[j] = ai[j] + ti;
    }
  }
}

double sum_squares(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

}  // namespace

const KernelTable table{quantize, compensated_axpy, sine_series, butterfly_stage, sum_squares};

}  // namespace lcq::simd::scalar
