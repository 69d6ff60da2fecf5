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

#include "lcq/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "lcq/error.hpp"
#include "lcq/simd/kernels.hpp"

namespace lcq {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

void fft_inplace(std::span<double> re, std::span<double> im) {
  const std::size_t n = re.size();
  require(im.size() == n, "fft_inplace", "equal real and imaginary lengths");
  require(is_power_of_two(n), "fft_inplace", "power-of-two length");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }

  // Twiddles for the largest stage; smaller stages read them with a stride,
  // copied out contiguously so the butterfly kernel can stream them.
  const std::size_t half_n = n / 2;
  std::vector<double> cos_tab(half_n);
  std::vector<double> sin_tab(half_n);
  for (std::size_t k = 0; k < half_n; ++k) {
    const double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    cos_tab[k] = std::cos(a);
    sin_tab[k] = std::sin(a);
  }
  std::vector<double> wr(half_n);
  std::vector<double> wi(half_n);
  const auto& kern = simd::kernels(simd::active_backend());
  for (std::size_t half = 1; half < n; half <<= 1) {
    const std::size_t stride = half_n / half;
    for (std::size_t j = 0; j < half; ++j) {
      wr[j] = cos_tab[j * stride];
      wi[j] = sin_tab[j * stride];
    }
    kern.butterfly_stage(re.data(), im.data(), n, half, wr.data(), wi.data());
  }
}

std::vector<std::complex<double>> dft_real(std::span<const double> samples) {
  std::vector<double> re(samples.begin(), samples.end());
  std::vector<double> im(samples.size(), 0.0);
  fft_inplace(re, im);
  std::vector<std::complex<double>> out(samples.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = {re[k], im[k]};
  return out;
}

}  // namespace lcq
