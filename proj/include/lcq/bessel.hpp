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

#include <span>
#include <vector>

namespace lcq {

inline constexpr int kMaxBesselOrder = 1'000'000;

/// J_n(x) for integer n and real x ≥ 0.
///
/// Regimes: power series for x < 12; Hankel's asymptotic expansion when
/// x ≥ max(30, 1.5|n|) and 8n² ≤ x; Miller's backward recurrence normalized
/// by J_0 + 2ΣJ_{2k} = 1 everywhere else. Negative orders use
/// J_{−n} = (−1)^n J_n. Absolute accuracy is about 1e-13 across the
/// supported domain (|n| ≤ 2000, x ≤ 2e5).
double bessel_j(int order, double x);

/// Orders −max_abs_order..+max_abs_order at one argument.
struct BesselRow {
  int max_abs_order = 0;
  double x = 0.0;
  std::vector<double> values;

  double at(int order) const { return values[static_cast<std::size_t>(order + max_abs_order)]; }
};

/// One recurrence sweep for a whole row; agrees with per-order bessel_j.
BesselRow bessel_j_row(int max_abs_order, double x);

/// Fills out[n] = J_n(x) for n = 0..out.size()−1.
void bessel_j_orders(double x, std::span<double> out);

/// Envelope sqrt(2/(πx)) used to scale absolute tolerances.
double bessel_envelope(double x) noexcept;

/// Audit path: (1/π)∫_0^π cos(nθ − x·sinθ) dθ by the trapezoid rule, which
/// converges geometrically for this periodic integrand. Independent of the
/// recurrences above; O(x + |n|) per call.
double bessel_j_integral(int order, double x);

namespace detail {

enum class BesselRegime { kZero, kSeries, kMiller, kHankel };

BesselRegime bessel_regime(int n, double x) noexcept;
double bessel_series(int n, double x);
double bessel_miller(int n, double x);
double bessel_hankel(int n, double x);
int miller_start(double top_order, double x) noexcept;
/// Orders above this are below 1e-180 and stored as zero in rows.
double negligible_order(double x) noexcept;

}  // namespace detail
}  // namespace lcq
