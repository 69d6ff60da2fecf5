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

#include <cmath>

namespace lcq::detail {

/// Root of a monotone f on [lo, hi] given f(lo) and f(hi) of opposite sign
/// (or zero). Newton steps with a bisection fallback whenever Newton would
/// leave the bracket or converge too slowly; runs to machine precision.
template <class F, class DF>
double solve_bracketed(F&& f, DF&& df, double lo, double hi, double f_lo, double f_hi) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  double xl = lo;
  double xh = hi;
  if (f_lo > 0.0) {
    xl = hi;
    xh = lo;
  }
  double t = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  double ft = f(t);
  double dft = df(t);
  for (int iter = 0; iter < 200; ++iter) {
    const bool newton_leaves = ((t - xh) * dft - ft) * ((t - xl) * dft - ft) > 0.0;
    const bool newton_slow = std::abs(2.0 * ft) > std::abs(dx_old * dft);
    if (newton_leaves || newton_slow) {
      dx_old = dx;
      dx = 0.5 * (xh - xl);
      t = xl + dx;
      if (xl == t) return t;
    } else {
      dx_old = dx;
      dx = ft / dft;
      const double prev = t;
      t -= dx;
      if (prev == t) return t;
    }
    if (std::abs(dx) <= 2e-16 * std::abs(t)) return t;
    ft = f(t);
    if (ft == 0.0) return t;
    dft = df(t);
    if (ft < 0.0) {
      xl = t;
    } else {
      xh = t;
    }
  }
  return t;
}

}  // namespace lcq::detail
