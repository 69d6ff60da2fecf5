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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lcq/error.hpp"
#include "lcq/simd/kernels.hpp"

namespace lcq::simd {

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
    case Backend::kScalar: break;
  }
  return "scalar";
}

bool backend_available(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Backend detect() noexcept {
  if (const char* env = std::getenv("LCQ_SIMD")) {
    const std::string_view want(env);
    for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
      if (want == backend_name(b) && backend_available(b)) return b;
    }
  }
  if (backend_available(Backend::kAvx2)) return Backend::kAvx2;
  if (backend_available(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::invalid_argument("SIMD backend not available: " + std::string(backend_name(b)));
  }
  active().store(b, std::memory_order_relaxed);
}

const KernelTable& kernels(Backend b) {
  switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::kAvx2:
      if (backend_available(b)) return avx2::table;
      break;
#endif
#if defined(__aarch64__)
    case Backend::kNeon: return neon::table;
#endif
    default: break;
  }
  return scalar::table;
}

void quantize(std::span<const double> in, std::span<double> out, double delta, double offset) {
  require(out.size() == in.size(), "simd::quantize", "equal lengths");
  kernels(active_backend()).quantize(in.data(), out.data(), in.size(), delta, offset);
}

void compensated_axpy(std::span<double> sum, std::span<double> comp, std::span<const double> x,
                      double weight) {
  require(sum.size() == x.size() && comp.size() == x.size(), "simd::compensated_axpy",
          "equal lengths");
  kernels(active_backend()).compensated_axpy(sum.data(), comp.data(), x.data(), x.size(), weight);
}

void sine_series(std::span<const double> coeffs, std::span<const double> theta,
                 std::span<double> out) {
  require(out.size() == theta.size(), "simd::sine_series", "equal lengths");
  kernels(active_backend())
      .sine_series(coeffs.data(), coeffs.size(), theta.data(), out.data(), theta.size());
}

double sum_squares(std::span<const double> x) {
  return kernels(active_backend()).sum_squares(x.data(), x.size());
}

}  // namespace lcq::simd
