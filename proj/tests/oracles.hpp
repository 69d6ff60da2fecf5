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

// Independent reference computations used only by the tests. None of these
// call into the library's numerical code.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

/// Plain bisection on a sign change; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

struct Crossing {
  double time;
  int direction;  // +1 up, −1 down
};

/// Threshold crossings of A·sin(2πf t) + dc on (0, t_end]: scan a dense grid for
/// cell changes, then bisect each bracket against the threshold between.
inline std::vector<Crossing> dense_crossings(double amplitude, double fx, double dc,
                                             double delta, double offset, double t_end,
                                             std::size_t points) {
  const long double w = 2.0L * kPiL * fx;
  auto x = [&](double t) {
    return static_cast<double>(amplitude * std::sin(w * static_cast<long double>(t)) + dc);
  };
  auto cell = [&](double v) { return static_cast<long>(std::floor(v / delta - offset)); };
  std::vector<Crossing> out;
  double t_prev = 0.0;
  long c_prev = cell(x(0.0));
  for (std::size_t i = 1; i <= points; ++i) {
    const double t = t_end * static_cast<double>(i) / static_cast<double>(points);
    const long c = cell(x(t));
    if (c != c_prev) {
      const int dir = c > c_prev ? 1 : -1;
      for (long k = c_prev; k != c; k += dir) {
        const long boundary = dir > 0 ? k + 1 : k;
        const double th = (static_cast<double>(boundary) + offset) * delta;
        out.push_back({bisect([&](double s) { return x(s) - th; }, t_prev, t), dir});
      }
      c_prev = c;
    }
    t_prev = t;
  }
  return out;
}

/// J_n(x) from (1/π)∫_0^π cos(nθ − x sin θ) dθ by the trapezoid rule in long
/// double. The integrand is smooth and periodic, so the rule converges
/// geometrically once the panel count exceeds roughly (x + |n|)/2.
inline long double bessel_trapezoid(int n, double x, std::size_t panels) {
  const long double h = kPiL / static_cast<long double>(panels);
  long double sum = 0.5L * (1.0L + std::cos(static_cast<long double>(n) * kPiL));
  for (std::size_t k = 1; k < panels; ++k) {
    const long double th = h * static_cast<long double>(k);
    sum += std::cos(static_cast<long double>(n) * th - static_cast<long double>(x) * std::sin(th));
  }
  return sum * h / kPiL;
}

inline std::size_t bessel_panels(int n, double x) {
  return static_cast<std::size_t>(std::ceil(0.9 * (x + std::abs(n)) + 12.0 * std::cbrt(x) + 64.0));
}

/// Trapezoid at two resolutions; `spread` reports how far apart they are.
inline double bessel_quadrature(int n, double x, double* spread = nullptr) {
  const std::size_t m = bessel_panels(n, x);
  const long double a = bessel_trapezoid(n, x, m);
  const long double b = bessel_trapezoid(n, x, m + m / 2 + 7);
  if (spread) *spread = static_cast<double>(std::fabs(a - b));
  return static_cast<double>(b);
}

/// Ascending power series in long double; only for small x.
inline long double bessel_power_series(int n, long double x) {
  const bool negative = n < 0;
  const int m = std::abs(n);
  long double term = 1.0L;
  for (int k = 1; k <= m; ++k) term *= (x / 2.0L) / static_cast<long double>(k);
  long double sum = term;
  const long double q = -(x * x) / 4.0L;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k + m));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum) && k > x) break;
  }
  return (negative && (m & 1)) ? -sum : sum;
}

inline double simpson_adaptive_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_adaptive_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_adaptive_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double simpson_adaptive(const std::function<double(double)>& f, double a, double b,
                               double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_adaptive_rec(f, a, b, fa, fm, fb, whole, tol, 50);
}

/// O(N²) DFT with the same sign and normalization as the library's transform.
inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double re = 0.0L;
    long double im = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const long double a = -2.0L * kPiL * static_cast<long double>((j * k) % n) /
                            static_cast<long double>(n);
      re += x[j] * std::cos(a);
      im += x[j] * std::sin(a);
    }
    out[k] = {static_cast<double>(re), static_cast<double>(im)};
  }
  return out;
}

/// Mid-tread rounding, ties up, evaluated independently of the library.
inline long double round_mid_tread(long double v, long double delta) {
  return std::floor(v / delta + 0.5L) * delta;
}

/// Mean of (Q(x) − x)² over one period of A·sin on an n-point uniform grid.
inline double time_domain_mse(double amplitude, double delta, std::size_t n) {
  long double acc = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    const long double v =
        amplitude * std::sin(2.0L * kPiL * static_cast<long double>(k) / static_cast<long double>(n));
    const long double e = round_mid_tread(v, delta) - v;
    acc += e * e;
  }
  return static_cast<double>(acc / static_cast<long double>(n));
}

/// Arcsin solution for the crossings of A·sin(2πf t) with the mid-tread
/// thresholds over one period, sorted by time.
inline std::vector<Crossing> arcsin_crossings(double amplitude, double fx, double delta) {
  std::vector<Crossing> out;
  const long double w = 2.0L * kPiL * fx;
  const long lo = static_cast<long>(std::floor(-amplitude / delta)) - 1;
  const long hi = static_cast<long>(std::ceil(amplitude / delta)) + 1;
  for (long k = lo; k <= hi; ++k) {
    const long double th = (static_cast<long double>(k) + 0.5L) * delta;
    if (std::fabs(th) >= amplitude) continue;
    const long double a = std::asin(th / amplitude);
    long double up = a / w;
    if (up <= 0.0L) up += 1.0L / fx;
    out.push_back({static_cast<double>(up), +1});
    out.push_back({static_cast<double>((kPiL - a) / w), -1});
  }
  std::sort(out.begin(), out.end(), [](const Crossing& l, const Crossing& r) { return l.time < r.time; });
  return out;
}

}  // namespace oracle
