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

#include "lcq/quantizer.hpp"

namespace lcq {

/// Truncation of the double series: sidebands q = 1..q_max, harmonics
/// |r| ≤ r_max.
struct TruncationSpec {
  int q_max = 50;
  int r_max = 1000;

  void validate() const;

  /// r_max large enough to hold every harmonic the q_max-th sideband carries,
  /// 2πA·q_max/Δ plus the Bessel turning-point margin.
  static TruncationSpec full_band(double amplitude, double delta, int q_max);

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;
};

/// Sine coefficients c_r of a harmonic series Σ_{r≥1} c_r·sin(2π·r·fx·t).
/// coefficients[r − 1] holds c_r; there is no r = 0 entry.
struct HarmonicTable {
  double fx = 1.0;
  std::vector<double> coefficients;

  int r_max() const noexcept { return static_cast<int>(coefficients.size()); }
  /// c_r, zero for r outside 1..r_max.
  double at(int r) const noexcept;
};

/// Per-sideband contributions: sidebands[q − 1][r − 1] is the part of c_r
/// contributed by sideband q.
struct SidebandDecomposition {
  double fx = 1.0;
  std::vector<std::vector<double>> sidebands;

  int q_max() const noexcept { return static_cast<int>(sidebands.size()); }
};

/// One real line a·cos(2πft + φ) of a one-sided spectrum.
struct SpectralLine {
  double frequency_hz = 0.0;
  double amplitude = 0.0;
  double phase_rad = 0.0;
};

/// Sign applied to sideband q for the quantizer's threshold placement,
/// cos(2πq·offset): +1 for mid-rise, (−1)^q for mid-tread. Other offsets are
/// rejected since their error series carries cosine terms.
double sideband_sign(const QuantizerSpec& q, int sideband);

/// Quantization-error coefficients for x(t) = A·sin(2π·fx·t):
///   c_r = (2Δ/π)·Σ_q σ_q·J_r(2πqA/Δ)/q   for odd r,   c_r = 0 for even r,
/// i.e. the ±r terms of the two-sided series folded with J_{−r} = (−1)^r J_r.
/// Depends on A/Δ only (times Δ); fx is carried along for evaluation.
HarmonicTable error_coefficients(double amplitude, const QuantizerSpec& q,
                                 const TruncationSpec& trunc, double fx = 1.0);

SidebandDecomposition sideband_decomposition(double amplitude, const QuantizerSpec& q,
                                             const TruncationSpec& trunc, double fx = 1.0);

/// Fixed-order compensated sum of a decomposition over q.
HarmonicTable sum_sidebands(const SidebandDecomposition& d);

/// e(t) = Σ_r c_r·sin(2π·r·fx·t).
double error_waveform(const HarmonicTable& table, double t);
std::vector<double> error_waveform(const HarmonicTable& table, std::span<const double> times);

/// Input tone plus one line per harmonic r of the error: amplitude |c_r| (the
/// r = 1 line carries |A + c_1|), phase −π/2 for positive sine weight and
/// +π/2 for negative. Equivalent to the two-sided Dirac pairs of the Fourier
/// transform with amplitude = pair weight/π.
std::vector<SpectralLine> spectral_lines(double amplitude, double fx, const QuantizerSpec& q,
                                         const TruncationSpec& trunc);

/// Modulation term m(t) of the bipolar PFM output for w(t) = B·cos(2π·fx·t),
/// as cosine coefficients m_r (index r − 1):
///   m_r = Σ_q σ_q·2Δ·Σ_{±r} J_{±r}(qB/(fx·Δ))·(±r·fx/q).
/// Evaluated from the unfolded two-sided sum, independently of
/// error_coefficients; term-wise m_r = 2π·r·fx·c_r.
struct CosineTable {
  double fx = 1.0;
  std::vector<double> coefficients;
};
CosineTable bipolar_pfm_coefficients(double derivative_amplitude, double fx,
                                     const QuantizerSpec& q, const TruncationSpec& trunc);
double cosine_series(const CosineTable& table, double t);

/// Truncated trigonometric series of a unipolar PFM impulse train (weights Δ)
/// for v(t) = v_m + B·cos(2π·fx·t):
///   d(t) = Δ·f_0 + B·cos(2π·fx·t)
///        + 2f_0Δ Σ_q Σ_r J_r(qB/(fx·Δ))·(1 + r·fx/(q·f_0))·cos(2π(q·f_0 + r·fx)t)
/// with f_0 = v_m/Δ > 0.
class UnipolarPfmSeries {
 public:
  UnipolarPfmSeries(double v_m, double derivative_amplitude, double fx, double delta,
                    const TruncationSpec& trunc);

  struct Term {
    double frequency_hz;
    double coefficient;
  };

  double operator()(double t) const;
  /// Cosine terms of m(t); the same frequency may appear more than once.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  double mean() const noexcept { return mean_; }
  double derivative_amplitude() const noexcept { return b_; }
  double fx() const noexcept { return fx_; }

 private:
  double mean_ = 0.0;
  double b_ = 0.0;
  double fx_ = 1.0;
  std::vector<Term> terms_;
};

double unipolar_series_eval(double v_m, double derivative_amplitude, double fx, double delta,
                            const TruncationSpec& trunc, double t);

}  // namespace lcq
