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

#include <cstdint>
#include <span>

#include "lcq/signals.hpp"
#include "lcq/waveform.hpp"

namespace lcq {

/// Unbounded uniform threshold quantizer. Thresholds sit at
/// (k + threshold_offset)·delta; each cell reconstructs to its midpoint.
/// offset 0.5 is mid-tread (zero is a level), 0 is mid-rise.
struct QuantizerSpec {
  double delta = 1.0;
  double threshold_offset = 0.5;

  void validate() const;

  /// Index k of the cell [(k+o)Δ, (k+1+o)Δ) containing v. Ties go up.
  std::int64_t cell_of(double v) const noexcept;
  double lower_threshold(std::int64_t cell) const noexcept {
    return (static_cast<double>(cell) + threshold_offset) * delta;
  }
  double level(std::int64_t cell) const noexcept {
    return (static_cast<double>(cell) + threshold_offset + 0.5) * delta;
  }

  friend bool operator==(const QuantizerSpec&, const QuantizerSpec&) = default;
};

/// Reconstruction level of the cell containing v; on-threshold values round
/// toward +∞.
double quantize_value(const QuantizerSpec& q, double v);

/// Cell occupied just after t = 0. Equals cell_of(x(0)) unless x(0) sits
/// exactly on a threshold with the signal heading down.
std::int64_t initial_cell(const QuantizerSpec& q, const SinusoidSpec& s);

/// Every threshold crossing of x(t) in (0, t_end], +Δ upward and −Δ downward,
/// solved per threshold from the arcsine branches. Tangential touches are not
/// crossings.
EventTrain crossing_events(const QuantizerSpec& q, const SinusoidSpec& s, double t_end);

/// y_q(t) = quantize_value(x(t)) on each grid instant.
StepWaveform quantize_waveform(const QuantizerSpec& q, const SinusoidSpec& s,
                               std::span<const double> grid);

}  // namespace lcq
