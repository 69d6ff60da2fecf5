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

#include "lcq/series.hpp"

#include <cmath>
#include <numbers>

#include "lcq/bessel.hpp"
#include "lcq/error.hpp"
#include "lcq/signals.hpp"
#include "lcq/simd/kernels.hpp"

namespace lcq {

void TruncationSpec::validate() const {
  require(q_max >= 1, "TruncationSpec", "q_max >= 1");
  require(r_max >= 0, "TruncationSpec", "r_max >= 0");
  require(r_max <= kMaxBesselOrder, "TruncationSpec", "r_max <= 1e6");
}

TruncationSpec TruncationSpec::full_band(double amplitude, double delta, int q_max) {
  require(amplitude > 0.0 && delta > 0.0, "TruncationSpec::full_band", "amplitude, delta > 0");
  const double x = kTwoPi * amplitude * q_max / delta;
  const double r = std::ceil(x + 40.0 * std::cbrt(x) + 64.0);
  require(r <= kMaxBesselOrder, "TruncationSpec::full_band", "2πA·q_max/Δ below 1e6");
  return {q_max, static_cast<int>(r)};
}

double HarmonicTable::at(int r) const noexcept {
  if (r < 1 || r > r_max()) return 0.0;
  return coefficients[static_cast<std::size_t>(r - 1)];
}

double sideband_sign(const QuantizerSpec& q, int sideband) {
  if (q.threshold_offset == 0.0) return 1.0;
  if (q.threshold_offset == 0.5) return (sideband & 1) ? -1.0 : 1.0;
  throw PreconditionError("sideband_sign", "threshold_offset of 0 or 0.5");
}

namespace {

void check_series_args(double amplitude, const QuantizerSpec& q, const TruncationSpec& trunc,
                       const char* where) {
  require(std::isfinite(amplitude) && amplitude > 0.0, where, "amplitude > 0");
  q.validate();
  trunc.validate();
  sideband_sign(q, 1);
}

// Calls visit(q, weight_q, odd_row) for each sideband; odd_row[i] = J_{2i+1}
// at 2πqA/Δ and weight_q = σ_q·2Δ/(πq), so the sideband's contribution to
// c_{2i+1} is weight_q·odd_row[i].
template <class Visit>
void for_each_sideband(double amplitude, const QuantizerSpec& q, const TruncationSpec& trunc,
                       Visit&& visit) {
  const int r_max = trunc.r_max;
  const std::size_t n_odd = static_cast<std::size_t>((r_max + 1) / 2);
  std::vector<double> row(static_cast<std::size_t>(r_max) + 1);
  std::vector<double> odd(n_odd);
  for (int s = 1; s <= trunc.q_max; ++s) {
    const double x = kTwoPi * s * amplitude / q.delta;
    bessel_j_orders(x, row);
    for (std::size_t i = 0; i < n_odd; ++i) odd[i] = row[2 * i + 1];
    const double weight = sideband_sign(q, s) * 2.0 * q.delta / (std::numbers::pi * s);
    visit(s, weight, std::span<const double>(odd));
  }
}

HarmonicTable spread_odd(std::span<const double> odd, int r_max, double fx) {
  HarmonicTable t;
  t.fx = fx;
  t.coefficients.assign(static_cast<std::size_t>(r_max), 0.0);
  for (std::size_t i = 0; i < odd.size(); ++i) t.coefficients[2 * i] = odd[i];
  return t;
}

}  // namespace

HarmonicTable error_coefficients(double amplitude, const QuantizerSpec& q,
                                 const TruncationSpec& trunc, double fx) {
  check_series_args(amplitude, q, trunc, "error_coefficients");
  const std::size_t n_odd = static_cast<std::size_t>((trunc.r_max + 1) / 2);
  std::vector<double> sum(n_odd, 0.0);
  std::vector<double> comp(n_odd, 0.0);
  for_each_sideband(amplitude, q, trunc, [&](int, double weight, std::span<const double> odd) {
    simd::compensated_axpy(sum, comp, odd, weight);
  });
  for (std::size_t i = 0; i < n_odd; ++i) sum[i] += comp[i];
  return spread_odd(sum, trunc.r_max, fx);
}

SidebandDecomposition sideband_decomposition(double amplitude, const QuantizerSpec& q,
                                             const TruncationSpec& trunc, double fx) {
  check_series_args(amplitude, q, trunc, "sideband_decomposition");
  SidebandDecomposition d;
  d.fx = fx;
  d.sidebands.reserve(static_cast<std::size_t>(trunc.q_max));
  for_each_sideband(amplitude, q, trunc, [&](int, double weight, std::span<const double> odd) {
    std::vector<double> contrib(odd.size());
    for (std::size_t i = 0; i < odd.size(); ++i) contrib[i] = weight * odd[i];
    d.sidebands.push_back(spread_odd(contrib, trunc.r_max, fx).coefficients);
  });
  return d;
}

HarmonicTable sum_sidebands(const SidebandDecomposition& d) {
  HarmonicTable t;
  t.fx = d.fx;
  if (d.sidebands.empty()) return t;
  const std::size_t n = d.sidebands.front().size();
  std::vector<double> sum(n, 0.0);
  std::vector<double> comp(n, 0.0);
  for (const auto& side : d.sidebands) {
    require(side.size() == n, "sum_sidebands", "equal-length sideband tables");
    simd::compensated_axpy(sum, comp, side, 1.0);
  }
  for (std::size_t i = 0; i < n; ++i) sum[i] += comp[i];
  t.coefficients = std::move(sum);
  return t;
}

double error_waveform(const HarmonicTable& table, double t) {
  const double times[] = {t};
  return error_waveform(table, times).front();
}

std::vector<double> error_waveform(const HarmonicTable& table, std::span<const double> times) {
  std::vector<double> theta(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    // reduce before scaling so large t keeps its phase
    const double cycles = table.fx * times[i];
    theta[i] = kTwoPi * (cycles - std::floor(cycles));
  }
  std::vector<double> out(times.size(), 0.0);
  if (!table.coefficients.empty()) simd::sine_series(table.coefficients, theta, out);
  return out;
}

std::vector<SpectralLine> spectral_lines(double amplitude, double fx, const QuantizerSpec& q,
                                         const TruncationSpec& trunc) {
  require(std::isfinite(fx) && fx > 0.0, "spectral_lines", "fx > 0");
  const HarmonicTable table = error_coefficients(amplitude, q, trunc, fx);
  std::vector<SpectralLine> lines;
  const int top = std::max(1, table.r_max());
  lines.reserve(static_cast<std::size_t>(top));
  for (int r = 1; r <= top; ++r) {
    const double c = table.at(r) + (r == 1 ? amplitude : 0.0);
    const double phase = c < 0.0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
    lines.push_back({r * fx, std::abs(c), phase});
  }
  return lines;
}

CosineTable bipolar_pfm_coefficients(double derivative_amplitude, double fx,
                                     const QuantizerSpec& q, const TruncationSpec& trunc) {
  require(std::isfinite(derivative_amplitude) && derivative_amplitude > 0.0,
          "bipolar_pfm_coefficients", "B > 0");
  require(std::isfinite(fx) && fx > 0.0, "bipolar_pfm_coefficients", "fx > 0");
  q.validate();
  trunc.validate();
  const double delta = q.delta;
  CosineTable out;
  out.fx = fx;
  out.coefficients.assign(static_cast<std::size_t>(trunc.r_max), 0.0);
  std::vector<double> comp(out.coefficients.size(), 0.0);
  std::vector<double> term(out.coefficients.size(), 0.0);
  for (int s = 1; s <= trunc.q_max; ++s) {
    const double beta = s * derivative_amplitude / (fx * delta);
    const BesselRow row = bessel_j_row(trunc.r_max, beta);
    const double scale = sideband_sign(q, s) * 2.0 * delta * fx / s;
    // cos is even: the r and −r terms share the line at r·fx
    for (int r = 1; r <= trunc.r_max; ++r) {
      term[r - 1] = scale * (r * row.at(r) + (-r) * row.at(-r));
    }
    simd::compensated_axpy(out.coefficients, comp, term, 1.0);
  }
  for (std::size_t i = 0; i < comp.size(); ++i) out.coefficients[i] += comp[i];
  return out;
}

double cosine_series(const CosineTable& table, double t) {
  const double cycles = table.fx * t;
  const double theta = kTwoPi * (cycles - std::floor(cycles));
  double acc = 0.0;
  for (std::size_t i = 0; i < table.coefficients.size(); ++i) {
    acc += table.coefficients[i] * std::cos(static_cast<double>(i + 1) * theta);
  }
  return acc;
}

UnipolarPfmSeries::UnipolarPfmSeries(double v_m, double derivative_amplitude, double fx,
                                     double delta, const TruncationSpec& trunc)
    : b_(derivative_amplitude), fx_(fx) {
  require(std::isfinite(v_m) && v_m > 0.0, "unipolar_series_eval", "v_m > 0 (f_0 > 0)");
  require(std::isfinite(derivative_amplitude) && derivative_amplitude >= 0.0,
          "unipolar_series_eval", "B >= 0");
  require(std::isfinite(fx) && fx > 0.0, "unipolar_series_eval", "fx > 0");
  require(std::isfinite(delta) && delta > 0.0, "unipolar_series_eval", "delta > 0");
  trunc.validate();
  const double f0 = v_m / delta;
  mean_ = v_m;
  terms_.reserve(static_cast<std::size_t>(trunc.q_max) * (2 * trunc.r_max + 1));
  for (int s = 1; s <= trunc.q_max; ++s) {
    const double beta = s * derivative_amplitude / (fx * delta);
    const BesselRow row = bessel_j_row(trunc.r_max, beta);
    for (int r = -trunc.r_max; r <= trunc.r_max; ++r) {
      const double j = row.at(r);
      if (j == 0.0) continue;
      const double c = 2.0 * f0 * delta * j * (1.0 + r * fx / (s * f0));
      terms_.push_back({s * f0 + r * fx, c});
    }
  }
}

double UnipolarPfmSeries::operator()(double t) const {
  double acc = mean_ + b_ * std::cos(kTwoPi * fx_ * t);
  for (const Term& term : terms_) acc += term.coefficient * std::cos(kTwoPi * term.frequency_hz * t);
  return acc;
}

double unipolar_series_eval(double v_m, double derivative_amplitude, double fx, double delta,
                            const TruncationSpec& trunc, double t) {
  return UnipolarPfmSeries(v_m, derivative_amplitude, fx, delta, trunc)(t);
}

}  // namespace lcq
