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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "lcq/series.hpp"
#include "lcq/spectrum.hpp"
#include "lcq/waveform.hpp"

namespace lcq::io {

/// Shortest decimal with 17 significant digits ("%.17g").
std::string format_real(double v);

void write_series_csv(std::ostream& os, std::span<const double> times,
                      std::span<const double> values);
void write_events_csv(std::ostream& os, const EventTrain& train);
void write_harmonics_csv(std::ostream& os, const HarmonicTable& table);
void write_sidebands_csv(std::ostream& os, const SidebandDecomposition& d);
void write_lines_csv(std::ostream& os, std::span<const SpectralLine> lines);
/// freq_hz,amp_db rows, amplitudes in dB re one quantizer unit.
void write_spectrum_csv(std::ostream& os, std::span<const double> freqs,
                        std::span<const double> amplitudes);

/// CSV readers for the formats above (headers required).
EventTrain read_events_csv(std::istream& is);
HarmonicTable read_harmonics_csv(std::istream& is, double fx = 1.0);

nlohmann::json to_json(const EventTrain& train);
nlohmann::json to_json(const HarmonicTable& table);
nlohmann::json to_json(const SidebandDecomposition& d);
nlohmann::json to_json(std::span<const SpectralLine> lines);
HarmonicTable harmonic_table_from_json(const nlohmann::json& j);

/// Writes `contents` to `path`, creating parent directories. Throws
/// std::runtime_error on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace lcq::io
