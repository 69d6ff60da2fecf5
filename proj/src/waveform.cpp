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

#include "lcq/waveform.hpp"

#include <cmath>
#include <string>

#include "lcq/error.hpp"

namespace lcq {

void require_strictly_increasing(std::span<const double> grid, const char* where) {
  require(!grid.empty(), where, "non-empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(std::isfinite(grid[i]), where, "finite grid instants");
    if (i > 0) require(grid[i] > grid[i - 1], where, "strictly increasing grid");
  }
}

std::vector<double> coherent_grid(double fx, int periods, std::size_t n) {
  require(fx > 0.0, "coherent_grid", "fx > 0");
  require(periods >= 1, "coherent_grid", "periods >= 1");
  require(n >= 1, "coherent_grid", "n >= 1");
  std::vector<double> t(n);
  const double span = static_cast<double>(periods) / fx;
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = span * (static_cast<double>(k) / dn);
  return t;
}

}  // namespace lcq
