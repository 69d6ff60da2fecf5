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

#include "lcq/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace lcq::simd::neon {
namespace {

void quantize(const double* in, double* out, std::size_t n, double delta, double offset) {
  const float64x2_t d = vdupq_n_f64(delta);
  const float64x2_t o = vdupq_n_f64(offset);
  const float64x2_t half = vdupq_n_f64(0.5);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(in + i);
    float64x2_t c = vrndmq_f64(vsubq_f64(vdivq_f64(v, d), o));
    const float64x2_t hi = vmulq_f64(vaddq_f64(vaddq_f64(c, one), o), d);
    c = vaddq_f64(c, vbslq_f64(vcleq_f64(hi, v), one, zero));
    const float64x2_t lo = vmulq_f64(vaddq_f64(c, o), d);
    c = vsubq_f64(c, vbslq_f64(vcgtq_f64(lo, v), one, zero));
    vst1q_f64(out + i, vmulq_f64(vaddq_f64(vaddq_f64(c, o), half), d));
  }
  if (i < n) scalar::table.quantize(in + i, out + i, n - i, delta, offset);
}

void compensated_axpy(double* sum, double* comp, const double* x, std::size_t n, double weight) {
  const float64x2_t w = vdupq_n_f64(weight);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vmulq_f64(w, vld1q_f64(x + i));
    const float64x2_t s = vld1q_f64(sum + i);
    const float64x2_t t = vaddq_f64(s, v);
    const uint64x2_t s_big = vcgeq_f64(vabsq_f64(s), vabsq_f64(v));
    const float64x2_t if_s = vaddq_f64(vsubq_f64(s, t), v);
    const float64x2_t if_v = vaddq_f64(vsubq_f64(v, t), s);
    vst1q_f64(comp + i, vaddq_f64(vld1q_f64(comp + i), vbslq_f64(s_big, if_s, if_v)));
    vst1q_f64(sum + i, t);
  }
  for (; i < n; ++i) {
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
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const double tc[2] = {2.0 * std::cos(theta[i]), 2.0 * std::cos(theta[i + 1])};
    const double ts[2] = {std::sin(theta[i]), std::sin(theta[i + 1])};
    const float64x2_t two_cos = vld1q_f64(tc);
    float64x2_t b1 = vdupq_n_f64(0.0);
    float64x2_t b2 = vdupq_n_f64(0.0);
    for (std::size_t r = m; r-- > 0;) {
      const float64x2_t b0 = vaddq_f64(vdupq_n_f64(c[r]), vsubq_f64(vmulq_f64(two_cos, b1), b2));
      b2 = b1;
      b1 = b0;
    }
    vst1q_f64(out + i, vmulq_f64(b1, vld1q_f64(ts)));
  }
  for (; i < n; ++i) scalar::table.sine_series(c, m, theta + i, out + i, 1);
}

void butterfly_stage(double* re, double* im, std::size_t n, std::size_t half, const double* wr,
                     const double* wi) {
  if (half < 2) {
    scalar::table.butterfly_stage(re, im, n, half, wr, wi);
    return;
  }
  for (std::size_t start = 0; start < n; start += 2 * half) {
    double* ar = re + start;
    double* ai = im + start;
    double* br = ar + half;
    double* bi = ai + half;
    for (std::size_t j = 0; j < half; j += 2) {
      const float64x2_t vwr = vld1q_f64(wr + j);
      const float64x2_t vwi = vld1q_f64(wi + j);
      const float64x2_t vbr = vld1q_f64(br + j);
      const float64x2_t vbi = vld1q_f64(bi + j);
      const float64x2_t tr = vsubq_f64(vmulq_f64(vwr, vbr), vmulq_f64(vwi, vbi));
      const float64x2_t ti = vaddq_f64(vmulq_f64(vwr, vbi), vmulq_f64(vwi, vbr));
      const float64x2_t var = vld1q_f64(ar + j);
      const float64x2_t vai = vld1q_f64(ai + j);
      vst1q_f64(br + j, vsubq_f64(var, tr));
      vst1q_f64(bi + j, vsubq_f64(vai, ti));
      vst1q_f64(ar + j, vaddq_f64(var, tr));
      vst1q_f64(ai + j, vaddq_f64(vai, ti));
    }
  }
}

double sum_squares(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    acc = vaddq_f64(acc, vmulq_f64(v, v));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += x[i] * x[i];
  return total;
}

}  // namespace

const KernelTable table{quantize, compensated_axpy, sine_series, butterfly_stage, sum_squares};

}  // namespace lcq::simd::neon

#endif
