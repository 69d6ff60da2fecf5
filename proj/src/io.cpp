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

#include "lcq/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lcq/compare.hpp"
#include "lcq/error.hpp"

namespace lcq::io {
namespace {

double parse_real(const std::string& field, const char* where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw std::runtime_error(std::string(where) + ": malformed number '" + field + "'");
  }
  return v;
}

// Splits "a,b" with an optional trailing '\r'.
bool split_pair(std::string line, std::string& a, std::string& b) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) return false;
  const auto comma = line.find(',');
  if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
    throw std::runtime_error("csv: expected two columns in '" + line + "'");
  }
  a = line.substr(0, comma);
  b = line.substr(comma + 1);
  return true;
}

void expect_header(std::istream& is, const std::string& header) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("csv: missing header " + header);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw std::runtime_error("csv: expected header '" + header + "'");
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_series_csv(std::ostream& os, std::span<const double> times,
                      std::span<const double> values) {
  require(times.size() == values.size(), "write_series_csv", "equal lengths");
  os << "time_s,value\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    os << format_real(times[i]) << ',' << format_real(values[i]) << '\n';
  }
}

void write_events_csv(std::ostream& os, const EventTrain& train) {
  os << "time_s,weight\n";
  for (std::size_t i = 0; i < train.size(); ++i) {
    os << format_real(train.times[i]) << ',' << format_real(train.weights[i]) << '\n';
  }
}

void write_harmonics_csv(std::ostream& os, const HarmonicTable& table) {
  os << "r,coefficient\n";
  for (int r = 1; r <= table.r_max(); ++r) os << r << ',' << format_real(table.at(r)) << '\n';
}

void write_sidebands_csv(std::ostream& os, const SidebandDecomposition& d) {
  os << "q,r,contribution\n";
  for (std::size_t q = 0; q < d.sidebands.size(); ++q) {
    const auto& row = d.sidebands[q];
    for (std::size_t r = 0; r < row.size(); ++r) {
      os << q + 1 << ',' << r + 1 << ',' << format_real(row[r]) << '\n';
    }
  }
}

void write_lines_csv(std::ostream& os, std::span<const SpectralLine> lines) {
  os << "freq_hz,amplitude,phase_rad\n";
  for (const auto& l : lines) {
    os << format_real(l.frequency_hz) << ',' << format_real(l.amplitude) << ','
       << format_real(l.phase_rad) << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, std::span<const double> freqs,
                        std::span<const double> amplitudes) {
  require(freqs.size() == amplitudes.size(), "write_spectrum_csv", "equal lengths");
  os << "freq_hz,amp_db\n";
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    os << format_real(freqs[i]) << ',' << format_real(amplitude_db(amplitudes[i], 1.0)) << '\n';
  }
}

EventTrain read_events_csv(std::istream& is) {
  expect_header(is, "time_s,weight");
  EventTrain train;
  std::string line, a, b;
  while (std::getline(is, line)) {
    if (!split_pair(line, a, b)) continue;
    train.push_back(parse_real(a, "read_events_csv"), parse_real(b, "read_events_csv"));
  }
  return train;
}

HarmonicTable read_harmonics_csv(std::istream& is, double fx) {
  expect_header(is, "r,coefficient");
  HarmonicTable table;
  table.fx = fx;
  std::string line, a, b;
  while (std::getline(is, line)) {
    if (!split_pair(line, a, b)) continue;
    const double r = parse_real(a, "read_harmonics_csv");
    if (r != static_cast<double>(table.coefficients.size() + 1)) {
      throw std::runtime_error("read_harmonics_csv: harmonics must run 1, 2, 3, ...");
    }
    table.coefficients.push_back(parse_real(b, "read_harmonics_csv"));
  }
  return table;
}

nlohmann::json to_json(const EventTrain& train) {
  return {{"time_s", train.times}, {"weight", train.weights}};
}

nlohmann::json to_json(const HarmonicTable& table) {
  return {{"fx_hz", table.fx}, {"coefficients", table.coefficients}};
}

nlohmann::json to_json(const SidebandDecomposition& d) {
  return {{"fx_hz", d.fx}, {"sidebands", d.sidebands}};
}

nlohmann::json to_json(std::span<const SpectralLine> lines) {
  auto out = nlohmann::json::array();
  for (const auto& l : lines) {
    out.push_back({{"freq_hz", l.frequency_hz}, {"amplitude", l.amplitude},
                   {"phase_rad", l.phase_rad}});
  }
  return out;
}

HarmonicTable harmonic_table_from_json(const nlohmann::json& j) {
  HarmonicTable t;
  t.fx = j.at("fx_hz").get<double>();
  t.coefficients = j.at("coefficients").get<std::vector<double>>();
  return t;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create " + path.parent_path().string() + ": " +
                                     ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace lcq::io
