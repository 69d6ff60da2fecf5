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

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#define LCQ_AVX2 __attribute__((target("avx2")))

namespace lcq::simd::avx2 {
namespace {

LCQ_AVX2 void quantize(const double* in, double* out, std::size_t n, double delta,
                       double offset) {
  const __m256d d = _mm256_set1_pd(delta);
  const __m256d o = _mm256_set1_pd(offset);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(in + i);
    __m256d c = _mm256_floor_pd(_mm256_sub_pd(_mm256_div_pd(v, d), o));
    const __m256d hi = _mm256_mul_pd(_mm256_add_pd(_mm256_add_pd(c, one), o), d);
    c = _mm256_add_pd(c, _mm256_and_pd(_mm256_cmp_pd(hi, v, _CMP_LE_OQ), one));
    const __m256d lo = _mm256_mul_pd(_mm256_add_pd(c, o), d);
    c = _mm256_sub_pd(c, _mm256_and_pd(_mm256_cmp_pd(lo, v, _CMP_GT_OQ), one));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_add_pd(_mm256_add_pd(c, o), half), d));
  }
  if (i < n) scalar::table.quantize(in + i, out + i, n - i, delta, offset);
}

LCQ_AVX2 void compensated_axpy(double* sum, double* comp, const double* x, std::size_t n,
                               double weight) {
  const __m256d w = _mm256_set1_pd(weight);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_mul_pd(w, _mm256_loadu_pd(x + i));
    const __m256d s = _mm256_loadu_pd(sum + i);
    const __m256d t = _mm256_add_pd(s, v);
    const __m256d s_big =
        _mm256_cmp_pd(_mm256_and_pd(s, abs_mask), _mm256_and_pd(v, abs_mask), _CMP_GE_OQ);
    const __m256d if_s = _mm256_add_pd(_mm256_sub_pd(s, t), v);
    const __m256d if_v = _mm256_add_pd(_mm256_sub_pd(v, t), s);
    const __m256d c = _mm256_add_pd(_mm256_loadu_pd(comp + i), _mm256_blendv_pd(if_v, if_s, s_big));
    _mm256_storeu_pd(comp + i, c);
    _mm256_storeu_pd(sum + i, t);
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

// Four evaluation points per register, Clenshaw over the coefficients.
LCQ_AVX2 void sine_series(const double* c, std::size_t m, const double* theta, double* out,
                          std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    alignas(32) double tc[4];
    alignas(32) double ts[4];
    for (int k = 0; k < 4; ++k) {
      tc[k] = 2.0 * std::cos(theta[i + k]);
      ts[k] = std::sin(theta[i + k]);
    }
    const __m256d two_cos = _mm256_load_pd(tc);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (std::size_t r = m; r-- > 0;) {
      const __m256d b0 = _mm256_add_pd(_mm256_set1_pd(c[r]),
                                       _mm256_sub_pd(_mm256_mul_pd(two_cos, b1), b2));
      b2 = b1;
      b1 = b0;
    }
    _mm256_storeu_pd(out + i, _mm256_mul_pd(b1, _mm256_load_pd(ts)));
  }
  for (; i < n; ++i) {
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

LCQ_AVX2 void butterfly_stage(double* re, double* im, std::size_t n, std::size_t half,
                              const double* wr, const double* wi) {
  if (half < 4) {
    scalar::table.butterfly_stage(re, im, n, half, wr, wi);
    return;
  }
  for (std::size_t start = 0; start < n; start += 2 * half) {
    double* ar = re + start;
    double* ai = im + start;
    double* br = ar + half;
    double* bi = ai + half;
    for (std::size_t j = 0; j < half; j += 4) {
      const __m256d vwr = _mm256_loadu_pd(wr + j);
      const __m256d vwi = _mm256_loadu_pd(wi + j);
      const __m256d vbr = _mm256_loadu_pd(br + j);
      const __m256d vbi = _mm256_loadu_pd(bi + j);
      const __m256d tr = _mm256_sub_pd(_mm256_mul_pd(vwr, vbr), _mm256_mul_pd(vwi, vbi));
      const __m256d ti = _mm256_add_pd(_mm256_mul_pd(vwr, vbi), _mm256_mul_pd(vwi, vbr));
      const __m256d var = _mm256_loadu_pd(ar + j);
      const __m256d vai = _mm256_loadu_pd(ai + j);
      _mm256_storeu_pd(br + j, _mm256_sub_pd(var, tr));
      _mm256_storeu_pd(bi + j, _mm256_sub_pd(vai, ti));
      _mm256_storeu_pd(ar + j, _mm256_add_pd(var, tr));
      _mm256_storeu_pd(ai + j, _mm256_add_pd(vai, ti));
    }
  }
}

LCQ_AVX2 double sum_squares(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += x[i] * x[i];
  return total;
}

}  // namespace

const KernelTable table{quantize, compensated_axpy, sine_series, butterfly_stage, sum_squares};

}  // namespace lcq::simd::avx2

#endif
