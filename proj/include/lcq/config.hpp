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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcq/quantizer.hpp"
#include "lcq/series.hpp"
#include "lcq/signals.hpp"

namespace lcq {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { kCsv, kJson };
enum class CompareCheck { kAuto, kSpectral, kWaveform, kBoth };

std::string_view to_string(OutputFormat f) noexcept;
std::string_view to_string(CompareCheck c) noexcept;
OutputFormat parse_output_format(std::string_view s);
CompareCheck parse_compare_check(std::string_view s);

/// Everything a CLI run needs. Defaults reproduce the A = 5, fx = 2 mHz,
/// Δ = 1 demonstration with 50 sidebands and 1000 harmonics.
struct RunConfig {
  SinusoidSpec signal{5.0, 0.002, 0.0, 0.0};
  QuantizerSpec quantizer{};
  TruncationSpec truncation{};
  std::size_t grid = std::size_t{1} << 20;
  int periods = 1;
  std::filesystem::path out_dir = "lcquant-out";
  OutputFormat format = OutputFormat::kCsv;

  // compare
  double tolerance_db = 1.0;
  double floor_dbc = -100.0;
  CompareCheck check = CompareCheck::kAuto;

  // sweep
  std::vector<double> amplitudes;

  // bessel-check
  int order_min = 0;
  int order_max = 10;
  std::vector<double> bessel_arguments{0.0};

  /// Checks the shared preconditions; throws PreconditionError.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& c);

/// Overlays the fields present in `j` onto `base`. Unknown keys are
/// rejected, as is a schema_version other than kSchemaVersion.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

}  // namespace lcq
