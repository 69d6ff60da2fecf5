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

#include <cstddef>
#include <span>
#include <vector>

namespace lcq {

/// Signed impulse train d(t) = Σ w_k·δ(t − t_k). Times strictly increasing,
/// every |w_k| equal to the quantizer step.
struct EventTrain {
  std::vector<double> times;
  std::vector<double> weights;

  std::size_t size() const noexcept { return times.size(); }
  bool empty() const noexcept { return times.empty(); }
  void push_back(double t, double w) {
    times.push_back(t);
    weights.push_back(w);
  }
};

/// Piecewise-constant signal sampled on a strictly increasing grid.
struct StepWaveform {
  std::vector<double> times;
  std::vector<double> values;

  std::size_t size() const noexcept { return times.size(); }
};

/// Throws PreconditionError naming `where` if the grid is empty or not
/// strictly increasing.
void require_strictly_increasing(std::span<const double> grid, const char* where);

/// n uniformly spaced instants covering `periods` whole periods of `fx`,
/// t_k = k·periods/(fx·n), k = 0..n−1.
std::vector<double> coherent_grid(double fx, int periods, std::size_t n);

}  // namespace lcq
