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
#include <string_view>

namespace lcq::simd {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;

/// Backend used by the span wrappers below. Picked once from CPU features;
/// LCQ_SIMD=scalar|avx2|neon in the environment overrides the choice.
Backend active_backend() noexcept;
/// Throws std::invalid_argument if `b` is not available on this CPU.
void set_active_backend(Backend b);

/// Raw kernels. Element-wise kernels round exactly like the scalar reference;
/// only sum_squares reassociates.
struct KernelTable {
  // mid-cell level of in[i]; ties on a threshold (k+offset)·delta go up
  void (*quantize)(const double* in, double* out, std::size_t n, double delta, double offset);
  // Neumaier update of (sum, comp) with weight·x, lane by lane
  void (*compensated_axpy)(double* sum, double* comp, const double* x, std::size_t n,
                           double weight);
  // out[i] = Σ_{r=1}^{m} c[r−1]·sin(r·θ_i), Clenshaw recurrence per point
  void (*sine_series)(const double* c, std::size_t m, const double* theta, double* out,
                      std::size_t n);
  // one radix-2 DIT stage over split arrays; twiddles wr/wi have `half` entries
  void (*butterfly_stage)(double* re, double* im, std::size_t n, std::size_t half,
                          const double* wr, const double* wi);
  double (*sum_squares)(const double* x, std::size_t n);
};

const KernelTable& kernels(Backend b);

namespace scalar {
extern const KernelTable table;
}
#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
extern const KernelTable table;
}
#endif
#if defined(__aarch64__)
namespace neon {
extern const KernelTable table;
}
#endif

void quantize(std::span<const double> in, std::span<double> out, double delta, double offset);
void compensated_axpy(std::span<double> sum, std::span<double> comp, std::span<const double> x,
                      double weight);
void sine_series(std::span<const double> coeffs, std::span<const double> theta,
                 std::span<double> out);
double sum_squares(std::span<const double> x);

}  // namespace lcq::simd
