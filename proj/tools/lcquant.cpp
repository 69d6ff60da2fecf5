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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcq/commands.hpp"
#include "lcq/config.hpp"
#include "lcq/simd/kernels.hpp"

namespace {

struct Flags {
  lcq::RunConfig config;
  std::string out_dir = "lcquant-out";
  std::string format = "csv";
  std::string check = "auto";
  std::string config_file;
  std::string simd;
};

void add_shared(CLI::App& sub, Flags& f) {
  auto& c = f.config;
  sub.add_option("--amplitude", c.signal.amplitude, "Input amplitude A");
  sub.add_option("--frequency-hz", c.signal.frequency_hz, "Input frequency fx in Hz");
  sub.add_option("--dc", c.signal.dc, "Input offset");
  sub.add_option("--phase", c.signal.phase, "Input phase in radians");
  sub.add_option("--delta", c.quantizer.delta, "Quantization step");
  sub.add_option("--threshold-offset", c.quantizer.threshold_offset,
                 "Threshold offset in steps (0.5 mid-tread, 0 mid-rise)");
  sub.add_option("--q-max", c.truncation.q_max, "Number of sidebands");
  sub.add_option("--r-max", c.truncation.r_max, "Number of harmonics");
  sub.add_option("--grid", c.grid, "Samples on the time grid");
  sub.add_option("--periods", c.periods, "Input periods covered by the grid");
  sub.add_option("--out-dir", f.out_dir, "Output directory");
  sub.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--config", f.config_file, "JSON config; its fields override flags");
  sub.add_option("--simd", f.simd, "Kernel backend")
      ->check(CLI::IsMember({"scalar", "avx2", "neon"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-crossing quantizer spectra: simulation, series and comparison"};
  app.require_subcommand(1, 1);
  Flags f;
  auto& c = f.config;

  auto* simulate = app.add_subcommand("simulate", "Quantizer and PFM time-domain waveforms");
  auto* analyze = app.add_subcommand("analyze", "Series coefficients and analytical waveform");
  auto* compare = app.add_subcommand("compare", "Check the series against simulation");
  auto* sweep = app.add_subcommand("sweep", "SQNR over a list of amplitudes");
  auto* bessel = app.add_subcommand("bessel-check", "Audit Bessel values against quadrature");
  for (auto* sub : {simulate, analyze, compare, sweep, bessel}) add_shared(*sub, f);

  compare->add_option("--tolerance-db", c.tolerance_db, "Per-harmonic tolerance in dB");
  compare->add_option("--floor-dbc", c.floor_dbc, "Harmonics below this level are ignored");
  compare->add_option("--check", f.check, "Which check decides the exit status")
      ->check(CLI::IsMember({"auto", "spectral", "waveform", "both"}));
  sweep->add_option("--amplitudes", c.amplitudes, "Amplitudes to sweep")->delimiter(',');
  bessel->add_option("--order-min", c.order_min, "Lowest order");
  bessel->add_option("--order-max", c.order_max, "Highest order");
  bessel->add_option("--x", c.bessel_arguments, "Arguments")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lcq::kExitConfigError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    c.out_dir = f.out_dir;
    c.format = lcq::parse_output_format(f.format);
    c.check = lcq::parse_compare_check(f.check);
    if (!f.config_file.empty()) {
      std::ifstream in(f.config_file);
      if (!in) throw std::runtime_error("cannot read " + f.config_file);
      c = lcq::config_from_json(nlohmann::json::parse(in), c);
    }
    if (f.simd == "scalar") lcq::simd::set_active_backend(lcq::simd::Backend::kScalar);
    if (f.simd == "avx2") lcq::simd::set_active_backend(lcq::simd::Backend::kAvx2);
    if (f.simd == "neon") lcq::simd::set_active_backend(lcq::simd::Backend::kNeon);
  } catch (const std::exception& e) {
    std::cerr << "lcquant: " << e.what() << "\n";
    return lcq::kExitConfigError;
  }

  const lcq::CommandResult r = lcq::run_command(chosen->get_name(), c);
  if (r.exit_code == lcq::kExitConfigError) {
    std::cerr << "lcquant: " << r.report.value("error", std::string("configuration error"))
              << "\n";
  } else {
    std::cout << r.report.dump(2) << "\n";
  }
  return r.exit_code;
}
