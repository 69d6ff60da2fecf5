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

#include <string_view>

#include <json.hpp>

#include "lcq/config.hpp"

namespace lcq {

enum ExitCode : int { kExitPass = 0, kExitToleranceFailure = 1, kExitConfigError = 2 };

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::json report;
};

/// x, w, d, y_p and y_q on the coherent grid (five files).
CommandResult cmd_simulate(const RunConfig& config);
/// Harmonic table, sideband decomposition, spectral lines and the analytical
/// waveform x + e on the grid.
CommandResult cmd_analyze(const RunConfig& config);
/// Measured vs analytical comparison; exit 1 when a check fails.
CommandResult cmd_compare(const RunConfig& config);
/// SQNR (measured and analytical) per amplitude in config.amplitudes.
CommandResult cmd_sweep(const RunConfig& config);
/// J_n(x) against the quadrature audit path; exit 1 above tolerance.
CommandResult cmd_bessel_check(const RunConfig& config);

/// Dispatches by subcommand name and turns precondition and I/O errors into
/// exit code 2 with an "error" report. Every run also writes
/// <out_dir>/<command>_report.json.
CommandResult run_command(std::string_view name, const RunConfig& config);

}  // namespace lcq
