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

#include "lcq/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "lcq/error.hpp"

namespace lcq {
namespace detail {
namespace {

constexpr double kSeriesLimit = 12.0;
constexpr double kAsymptoticFloor = 30.0;
constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

// Neumaier running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  void scale(double f) noexcept {
    sum *= f;
    comp *= f;
  }
  double value() const noexcept { return sum + comp; }
};

}  // namespace

BesselRegime bessel_regime(int n, double x) noexcept {
  if (x == 0.0) return BesselRegime::kZero;
  if (x < kSeriesLimit) return BesselRegime::kSeries;
  const double dn = static_cast<double>(n);
  if (x < std::max(kAsymptoticFloor, 1.5 * dn)) return BesselRegime::kMiller;
  // Hankel's series only reaches full precision once the order is small next
  // to sqrt(x); the rest of the oscillatory zone goes to the recurrence.
  if (8.0 * dn * dn <= x) return BesselRegime::kHankel;
  return BesselRegime::kMiller;
}

double bessel_series(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const long double h = static_cast<long double>(x) / 2.0L;
  const long double log_lead = n * std::log(h) - std::lgamma(static_cast<long double>(n) + 1.0L);
  if (log_lead < -745.0L) return 0.0;
  const long double h2 = h * h;
  long double term = std::exp(log_lead);
  long double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= -h2 / (static_cast<long double>(k) * static_cast<long double>(n + k));
    sum += term;
    if (k > h && std::abs(term) <= 1e-21L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

int miller_start(double top_order, double x) noexcept {
  const double top = std::max(top_order, x) + 20.0 + 15.0 * std::cbrt(x);
  int m = static_cast<int>(std::ceil(top));
  return m + (m & 1);
}

double negligible_order(double x) noexcept { return x + 60.0 * std::cbrt(x) + 60.0; }

double bessel_miller(int n, double x) {
  const int m = miller_start(static_cast<double>(n), x);
  const double two_over_x = 2.0 / x;
  double above = 0.0;  // b_{k+1}
  double cur = 1.0;    // b_k, starting at k = m
  double captured = (m == n) ? cur : 0.0;
  CompensatedSum norm;
  norm.add(2.0 * cur);  // m is even and positive
  for (int k = m; k >= 1; --k) {
    const double below = static_cast<double>(k) * two_over_x * cur - above;
    above = cur;
    cur = below;
    const int idx = k - 1;
    if (idx == n) captured = cur;
    if ((idx & 1) == 0) norm.add(idx == 0 ? cur : 2.0 * cur);
    if (std::abs(cur) > kRescaleAbove) {
      cur *= kRescaleBy;
      above *= kRescaleBy;
      captured *= kRescaleBy;
      norm.scale(kRescaleBy);
    }
  }
  return captured / norm.value();
}

double bessel_hankel(int n, double x) {
  const double mu = 4.0 * static_cast<double>(n) * static_cast<double>(n);
  const double eight_x = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double prev_abs = INFINITY;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (static_cast<double>(k) * eight_x);
    const double mag = std::abs(term);
    if (k > 6 && mag > prev_abs) break;  // asymptotic series turned around
    // P = 1 − a2/x² + a4/x⁴ − …, Q = a1/x − a3/x³ + …
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (k >= 6 && mag <= 1e-17 * std::abs(p)) break;
    prev_abs = mag;
  }
  // χ = x − (2n+1)π/4; the π/4 multiple is reduced exactly from (2n+1) mod 8.
  const int m8 = static_cast<int>((2LL * n + 1) % 8);
  constexpr double r = std::numbers::sqrt2 / 2.0;
  double cc = 0.0;
  double sc = 0.0;
  switch (m8) {
    case 1: cc = r; sc = r; break;
    case 3: cc = -r; sc = r; break;
    case 5: cc = -r; sc = -r; break;
    default: cc = r; sc = -r; break;
  }
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cos_chi = cx * cc + sx * sc;
  const double sin_chi = sx * cc - cx * sc;
  return bessel_envelope(x) * (p * cos_chi - q * sin_chi);
}

}  // namespace detail

double bessel_envelope(double x) noexcept { return std::sqrt(2.0 / (std::numbers::pi * x)); }

namespace {

void check_args(int order, double x, const char* where) {
  require(std::isfinite(x) && x >= 0.0, where, "x >= 0");
  require(std::abs(static_cast<long long>(order)) <= kMaxBesselOrder, where,
          "|order| <= 1e6");
}

double nonnegative_order(int n, double x) {
  using detail::BesselRegime;
  switch (detail::bessel_regime(n, x)) {
    case BesselRegime::kZero: return n == 0 ? 1.0 : 0.0;
    case BesselRegime::kSeries: return detail::bessel_series(n, x);
    case BesselRegime::kHankel: return detail::bessel_hankel(n, x);
    case BesselRegime::kMiller: break;
  }
  return detail::bessel_miller(n, x);
}

}  // namespace

double bessel_j(int order, double x) {
  check_args(order, x, "bessel_j");
  const int n = std::abs(order);
  const double v = nonnegative_order(n, x);
  return (order < 0 && (n & 1)) ? -v : v;
}

void bessel_j_orders(double x, std::span<double> out) {
  if (out.empty()) return;
  const int top = static_cast<int>(out.size()) - 1;
  check_args(top, x, "bessel_j_orders");
  std::fill(out.begin(), out.end(), 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return;
  }
  if (x < 12.0) {
    for (int k = 0; k <= top; ++k) {
      out[k] = detail::bessel_series(k, x);
      if (out[k] == 0.0 && k > x) break;
    }
    return;
  }

  // Hankel covers a prefix of orders; one Miller sweep fills the rest.
  int hankel_top = -1;
  while (hankel_top < top &&
         detail::bessel_regime(hankel_top + 1, x) == detail::BesselRegime::kHankel) {
    ++hankel_top;
  }
  for (int k = 0; k <= hankel_top; ++k) out[k] = detail::bessel_hankel(k, x);
  if (hankel_top == top) return;

  const int store_top =
      static_cast<int>(std::min<double>(top, std::floor(detail::negligible_order(x))));
  const int m = detail::miller_start(static_cast<double>(store_top), x);
  const double two_over_x = 2.0 / x;
  double above = 0.0;
  double cur = 1.0;
  if (m <= store_top) out[m] = cur;
  detail::CompensatedSum norm;
  norm.add(2.0 * cur);
  for (int k = m; k >= 1; --k) {
    const double below = static_cast<double>(k) * two_over_x * cur - above;
    above = cur;
    cur = below;
    const int idx = k - 1;
    if (idx <= store_top && idx > hankel_top) out[idx] = cur;
    if ((idx & 1) == 0) norm.add(idx == 0 ? cur : 2.0 * cur);
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      above *= 1e-250;
      norm.scale(1e-250);
      for (int i = std::max(idx, hankel_top + 1); i <= std::min(store_top, m); ++i) out[i] *= 1e-250;
    }
  }
  const double inv = 1.0 / norm.value();
  for (int i = hankel_top + 1; i <= store_top; ++i) out[i] *= inv;
}

BesselRow bessel_j_row(int max_abs_order, double x) {
  require(max_abs_order >= 0, "bessel_j_row", "max_abs_order >= 0");
  check_args(max_abs_order, x, "bessel_j_row");
  BesselRow row;
  row.max_abs_order = max_abs_order;
  row.x = x;
  row.values.assign(2 * static_cast<std::size_t>(max_abs_order) + 1, 0.0);
  std::span<double> positive(row.values.data() + max_abs_order,
                             static_cast<std::size_t>(max_abs_order) + 1);
  bessel_j_orders(x, positive);
  for (int k = 1; k <= max_abs_order; ++k) {
    const double v = row.values[max_abs_order + k];
    row.values[max_abs_order - k] = (k & 1) ? -v : v;
  }
  return row;
}

double bessel_j_integral(int order, double x) {
  check_args(order, x, "bessel_j_integral");
  // The integrand is even about θ = 0 and 2π-periodic, so the half-range
  // trapezoid rule with endpoint weights ½ equals the full-period rule and
  // aliases only orders beyond 2M − |n|.
  const double span = x + std::abs(order);
  const auto m = static_cast<long>(std::ceil(0.75 * span + 10.0 * std::cbrt(x) + 40.0));
  const double h = std::numbers::pi / static_cast<double>(m);
  detail::CompensatedSum acc;
  for (long k = 0; k <= m; ++k) {
    const double theta = h * static_cast<double>(k);
    const double weight = (k == 0 || k == m) ? 0.5 : 1.0;
    acc.add(weight * std::cos(order * theta - x * std::sin(theta)));
  }
  return acc.value() / static_cast<double>(m);
}

}  // namespace lcq
