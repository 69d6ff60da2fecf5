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

#include "lcq/config.hpp"

#include <cmath>
#include <string>

#include "lcq/bessel.hpp"
#include "lcq/error.hpp"

namespace lcq {

std::string_view to_string(OutputFormat f) noexcept {
  return f == OutputFormat::kJson ? "json" : "csv";
}

std::string_view to_string(CompareCheck c) noexcept {
  switch (c) {
    case CompareCheck::kSpectral: return "spectral";
    case CompareCheck::kWaveform: return "waveform";
    case CompareCheck::kBoth: return "both";
    case CompareCheck::kAuto: break;
  }
  return "auto";
}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw PreconditionError("format", "one of csv, json");
}

CompareCheck parse_compare_check(std::string_view s) {
  for (auto c : {CompareCheck::kAuto, CompareCheck::kSpectral, CompareCheck::kWaveform,
                 CompareCheck::kBoth}) {
    if (s == to_string(c)) return c;
  }
  throw PreconditionError("check", "one of auto, spectral, waveform, both");
}

void RunConfig::validate() const {
  signal.validate();
  quantizer.validate();
  truncation.validate();
  require(grid >= 2 && grid <= (std::size_t{1} << 26), "grid", "2 <= grid <= 2^26");
  require(periods >= 1 && periods <= 1'000'000, "periods", "1 <= periods <= 1e6");
  require(!out_dir.empty(), "out_dir", "non-empty path");
  require(std::isfinite(tolerance_db) && tolerance_db > 0.0, "tolerance_db", "finite and > 0");
  require(std::isfinite(floor_dbc) && floor_dbc < 0.0, "floor_dbc", "finite and < 0");
  for (double a : amplitudes) {
    require(std::isfinite(a) && a >= 0.0, "amplitudes", "finite and >= 0");
  }
  require(order_min <= order_max, "order_min", "order_min <= order_max");
  require(order_min >= -kMaxBesselOrder && order_max <= kMaxBesselOrder, "order_max",
          "|order| <= 1e6");
  for (double x : bessel_arguments) {
    require(std::isfinite(x) && x >= 0.0, "x", "finite and >= 0");
  }
}

nlohmann::json to_json(const RunConfig& c) {
  return {
      {"schema_version", kSchemaVersion},
      {"amplitude", c.signal.amplitude},
      {"frequency_hz", c.signal.frequency_hz},
      {"dc", c.signal.dc},
      {"phase", c.signal.phase},
      {"delta", c.quantizer.delta},
      {"threshold_offset", c.quantizer.threshold_offset},
      {"q_max", c.truncation.q_max},
      {"r_max", c.truncation.r_max},
      {"grid", c.grid},
      {"periods", c.periods},
      {"out_dir", c.out_dir.generic_string()},
      {"format", std::string(to_string(c.format))},
      {"tolerance_db", c.tolerance_db},
      {"floor_dbc", c.floor_dbc},
      {"check", std::string(to_string(c.check))},
      {"amplitudes", c.amplitudes},
      {"order_min", c.order_min},
      {"order_max", c.order_max},
      {"x", c.bessel_arguments},
  };
}

namespace {

template <typename T>
void overlay(const nlohmann::json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PreconditionError(key, "a value of the right JSON type");
  }
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j, RunConfig base) {
  require(j.is_object(), "config", "a JSON object");
  static const char* const kKeys[] = {
      "schema_version", "amplitude", "frequency_hz", "dc",          "phase",
      "delta",          "threshold_offset", "q_max", "r_max",       "grid",
      "periods",        "out_dir",   "format",       "tolerance_db", "floor_dbc",
      "check",          "amplitudes", "order_min",   "order_max",   "x"};
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || item.key() == k;
    require(known, ("config key '" + item.key() + "'").c_str(), "a known key");
  }
  if (j.contains("schema_version")) {
    int v = 0;
    overlay(j, "schema_version", v);
    require(v == kSchemaVersion, "schema_version", "schema_version == 1");
  }
  overlay(j, "amplitude", base.signal.amplitude);
  overlay(j, "frequency_hz", base.signal.frequency_hz);
  overlay(j, "dc", base.signal.dc);
  overlay(j, "phase", base.signal.phase);
  overlay(j, "delta", base.quantizer.delta);
  overlay(j, "threshold_offset", base.quantizer.threshold_offset);
  overlay(j, "q_max", base.truncation.q_max);
  overlay(j, "r_max", base.truncation.r_max);
  overlay(j, "grid", base.grid);
  overlay(j, "periods", base.periods);
  if (j.contains("out_dir")) {
    std::string dir;
    overlay(j, "out_dir", dir);
    base.out_dir = dir;
  }
  if (j.contains("format")) {
    std::string f;
    overlay(j, "format", f);
    base.format = parse_output_format(f);
  }
  overlay(j, "tolerance_db", base.tolerance_db);
  overlay(j, "floor_dbc", base.floor_dbc);
  if (j.contains("check")) {
    std::string c;
    overlay(j, "check", c);
    base.check = parse_compare_check(c);
  }
  overlay(j, "amplitudes", base.amplitudes);
  overlay(j, "order_min", base.order_min);
  overlay(j, "order_max", base.order_max);
  overlay(j, "x", base.bessel_arguments);
  return base;
}

}  // namespace lcq
