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
#include <string>
#include <vector>

#include "lcq/quantizer.hpp"
#include "lcq/series.hpp"
#include "lcq/signals.hpp"

namespace lcq {

inline constexpr double kDbFloorClamp = -400.0;

/// 20·log10(|amplitude|/reference), clamped at kDbFloorClamp.
double amplitude_db(double amplitude, double reference) noexcept;

struct HarmonicComparison {
  int r = 0;
  double measured_db = 0.0;    // dBc
  double analytical_db = 0.0;  // dBc
  double delta_db = 0.0;
  bool included = false;
};

struct SpectralCheckOptions {
  double floor_dbc = -100.0;
  double tolerance_db = 1.0;
  int r_min = 2;
};

struct SpectralCheck {
  std::vector<HarmonicComparison> rows;
  SpectralCheckOptions options;
  int included = 0;
  int worst_harmonic = 0;
  double max_abs_delta_db = 0.0;
  bool passed = false;
};

/// Per-harmonic dB comparison, magnitudes relative to the carrier
/// amplitude. Only harmonics whose analytical level exceeds floor_dbc take
/// part in the aggregate.
SpectralCheck compare_harmonics(std::span<const double> measured_magnitudes,
                                const HarmonicTable& analytical, double carrier,
                                const SpectralCheckOptions& options = {});

struct WaveformCheckOptions {
  /// Half-width of each excluded window around a crossing, as a fraction of
  /// the period.
  double window_fraction = 0.005;
  double rms_tolerance = 0.05;  // × Δ
  double min_overshoot = 0.05;  // × Δ
};

struct WaveformCheck {
  std::size_t crossings = 0;
  double coverage = 0.0;  // fraction of the period inside windows
  double rms_outside = 0.0;
  double max_overshoot = 0.0;
  bool passed = false;
};

/// Compares x(t) + e(t) from `table` with y_q(t) over one period on an n-point
/// grid. Outside the Gibbs windows the RMS difference must stay below
/// rms_tolerance·Δ; inside them the reconstruction must ring past the
/// adjacent levels by more than min_overshoot·Δ.
WaveformCheck check_reconstruction(const SinusoidSpec& s, const QuantizerSpec& q,
                                   const HarmonicTable& table, std::size_t n,
                                   const WaveformCheckOptions& options = {});

}  // namespace lcq
