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

#include <complex>
#include <span>
#include <vector>

namespace lcq {

/// In-place iterative radix-2 DIT transform on split real/imaginary arrays,
/// X_k = Σ x_n·e^{−2πi·kn/N} (unnormalized). N must be a power of two.
void fft_inplace(std::span<double> re, std::span<double> im);

/// Unnormalized DFT of a real sequence, all N bins.
std::vector<std::complex<double>> dft_real(std::span<const double> samples);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace lcq
