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

#include "lcq/commands.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lcq/bessel.hpp"
#include "lcq/compare.hpp"
#include "lcq/error.hpp"
#include "lcq/io.hpp"
#include "lcq/pfm.hpp"
#include "lcq/quantizer.hpp"
#include "lcq/series.hpp"
#include "lcq/simd/kernels.hpp"
#include "lcq/spectrum.hpp"

namespace lcq {
namespace {

using nlohmann::json;

// Collects artifacts of one command under out_dir in the configured format.
class Output {
 public:
  explicit Output(const RunConfig& c) : config_(c) {}

  template <typename CsvWriter>
  void add(const std::string& stem, CsvWriter&& csv, const json& as_json) {
    std::string name;
    std::string body;
    if (config_.format == OutputFormat::kCsv) {
      std::ostringstream os;
      csv(os);
      name = stem + ".csv";
      body = os.str();
    } else {
      name = stem + ".json";
      body = as_json.dump(1) + "\n";
    }
    io::write_file(config_.out_dir / name, body);
    files_.push_back(name);
  }

  const std::vector<std::string>& files() const noexcept { return files_; }

 private:
  const RunConfig& config_;
  std::vector<std::string> files_;
};

json series_json(const std::vector<double>& t, const std::vector<double>& v) {
  return {{"time_s", t}, {"value", v}};
}

// JSON has no infinity; an ideal quantizer reports null.
json db_or_null(double db) { return std::isfinite(db) ? json(db) : json(nullptr); }

void require_series_input(const SinusoidSpec& s, const char* where) {
  require(s.dc == 0.0 && s.phase == 0.0, where, "dc == 0 and phase == 0 for the series model");
}

json base_report(std::string_view command, const RunConfig& config) {
  return {{"schema_version", kSchemaVersion},
          {"command", std::string(command)},
          {"config", to_json(config)}};
}

double sqnr_db(double amplitude, double power) {
  if (power <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(0.5 * amplitude * amplitude / power);
}

struct SqnrMetrics {
  double amplitude = 0.0;
  double measured_error_power = 0.0;   // harmonics r ≥ 2 of the simulation
  double measured_sqnr_db = 0.0;
  double measured_total_error_power = 0.0;  // includes the r = 1 deviation A − |Y_1|
  double measured_total_sqnr_db = 0.0;
  double analytical_error_power = 0.0;  // Σ c_r²/2, full band
  double analytical_sqnr_db = 0.0;
  int analytical_r_max = 0;
};

SqnrMetrics sqnr_metrics(const SinusoidSpec& s, const QuantizerSpec& q, int q_max,
                         int periods, std::size_t grid) {
  SqnrMetrics m;
  m.amplitude = s.amplitude;
  const SpectrumResult spec = coherent_spectrum(s, q, periods, grid);
  const HarmonicTable measured = harmonic_amplitudes(spec, spec.max_harmonic());
  const ErrorPower tail = error_power_and_sqnr(measured, s.amplitude);
  m.measured_error_power = tail.error_power;
  m.measured_sqnr_db = tail.sqnr_db;
  const double c1_measured = measured.at(1) - s.amplitude;
  m.measured_total_error_power = tail.error_power + 0.5 * c1_measured * c1_measured;
  m.measured_total_sqnr_db = sqnr_db(s.amplitude, m.measured_total_error_power);
  if (s.amplitude > 0.0) {
    const TruncationSpec band = TruncationSpec::full_band(s.amplitude, q.delta, q_max);
    const HarmonicTable c = error_coefficients(s.amplitude, q, band, s.frequency_hz);
    std::vector<double> tail_c(c.coefficients.begin() + 1, c.coefficients.end());
    m.analytical_error_power = 0.5 * simd::sum_squares(tail_c);
    m.analytical_r_max = band.r_max;
  }
  m.analytical_sqnr_db = sqnr_db(s.amplitude, m.analytical_error_power);
  return m;
}

json to_json(const SqnrMetrics& m) {
  return {{"amplitude", m.amplitude},
          {"measured_error_power", m.measured_error_power},
          {"measured_sqnr_db", db_or_null(m.measured_sqnr_db)},
          {"measured_total_error_power", m.measured_total_error_power},
          {"measured_total_sqnr_db", db_or_null(m.measured_total_sqnr_db)},
          {"analytical_error_power", m.analytical_error_power},
          {"analytical_sqnr_db", db_or_null(m.analytical_sqnr_db)},
          {"analytical_r_max", m.analytical_r_max}};
}

// Distance from t to the nearest event time (sorted).
double distance_to_events(const std::vector<double>& times, double t) {
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  double d = std::numeric_limits<double>::infinity();
  if (it != times.end()) d = *it - t;
  if (it != times.begin()) d = std::min(d, t - *(it - 1));
  return d;
}

}  // namespace

CommandResult cmd_simulate(const RunConfig& config) {
  config.validate();
  const SinusoidSpec& s = config.signal;
  const QuantizerSpec& q = config.quantizer;
  const double t_end = config.periods * s.period();
  const std::vector<double> grid = coherent_grid(s.frequency_hz, config.periods, config.grid);

  std::vector<double> x(grid.size());
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    x[i] = eval(s, grid[i]);
    v[i] = eval_derivative(s, grid[i]);
  }
  const EventTrain events = encode_bipolar(bipolar_config_for(q, s), s, t_end);
  const StepWaveform yp = integrate_events(events, bipolar_initial_level(q, s), grid);
  const StepWaveform yq = quantize_waveform(q, s, grid);

  // Compare away from events, where the step value is well defined.
  const double guard = 1e-9 * std::max(1.0, s.period());
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (distance_to_events(events.times, grid[i]) <= guard) continue;
    ++compared;
    if (yp.values[i] != yq.values[i]) ++mismatches;
  }
  const EventTrain closed_form = crossing_events(q, s, t_end);
  double max_time_error = 0.0;
  const bool same_count = closed_form.size() == events.size();
  if (same_count) {
    for (std::size_t i = 0; i < events.size(); ++i) {
      max_time_error = std::max(max_time_error, std::abs(events.times[i] - closed_form.times[i]));
    }
  }

  Output out(config);
  out.add("input", [&](std::ostream& os) { io::write_series_csv(os, grid, x); },
          series_json(grid, x));
  out.add("derivative", [&](std::ostream& os) { io::write_series_csv(os, grid, v); },
          series_json(grid, v));
  out.add("events", [&](std::ostream& os) { io::write_events_csv(os, events); },
          io::to_json(events));
  out.add("pfm_integral", [&](std::ostream& os) { io::write_series_csv(os, grid, yp.values); },
          series_json(grid, yp.values));
  out.add("quantized", [&](std::ostream& os) { io::write_series_csv(os, grid, yq.values); },
          series_json(grid, yq.values));

  const bool passed = mismatches == 0 && same_count && max_time_error <= 1e-9;
  CommandResult r;
  r.exit_code = passed ? kExitPass : kExitToleranceFailure;
  r.report = base_report("simulate", config);
  r.report["files"] = out.files();
  r.report["events"] = events.size();
  r.report["grid_points_compared"] = compared;
  r.report["pfm_quantizer_mismatches"] = mismatches;
  r.report["closed_form_events"] = closed_form.size();
  r.report["max_event_time_error_s"] = max_time_error;
  r.report["passed"] = passed;
  return r;
}

CommandResult cmd_analyze(const RunConfig& config) {
  config.validate();
  const SinusoidSpec& s = config.signal;
  const QuantizerSpec& q = config.quantizer;
  require_series_input(s, "analyze");
  const SidebandDecomposition d =
      sideband_decomposition(s.amplitude, q, config.truncation, s.frequency_hz);
  const HarmonicTable table = sum_sidebands(d);
  const std::vector<SpectralLine> lines =
      spectral_lines(s.amplitude, s.frequency_hz, q, config.truncation);

  const std::vector<double> grid = coherent_grid(s.frequency_hz, config.periods, config.grid);
  std::vector<double> y = error_waveform(table, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) y[i] += eval(s, grid[i]);

  Output out(config);
  out.add("harmonics", [&](std::ostream& os) { io::write_harmonics_csv(os, table); },
          io::to_json(table));
  out.add("sidebands", [&](std::ostream& os) { io::write_sidebands_csv(os, d); },
          io::to_json(d));
  out.add("spectral_lines", [&](std::ostream& os) { io::write_lines_csv(os, lines); },
          io::to_json(std::span<const SpectralLine>(lines)));
  out.add("analytical_waveform", [&](std::ostream& os) { io::write_series_csv(os, grid, y); },
          series_json(grid, y));

  std::vector<double> tail(table.coefficients.begin() + 1, table.coefficients.end());
  const double tail_power = 0.5 * simd::sum_squares(tail);
  const double c1 = table.at(1);
  CommandResult r;
  r.report = base_report("analyze", config);
  r.report["files"] = out.files();
  r.report["c1"] = c1;
  r.report["error_power"] = tail_power + 0.5 * c1 * c1;
  r.report["sqnr_db"] = db_or_null(sqnr_db(s.amplitude, tail_power + 0.5 * c1 * c1));
  r.report["passed"] = true;
  return r;
}

CommandResult cmd_compare(const RunConfig& config) {
  config.validate();
  const SinusoidSpec& s = config.signal;
  const QuantizerSpec& q = config.quantizer;
  require_series_input(s, "compare");
  require(s.amplitude > 0.0, "compare", "amplitude > 0");

  const SpectrumResult spec = coherent_spectrum(s, q, config.periods, config.grid);
  const int r_top = std::min(config.truncation.r_max, spec.max_harmonic());
  const std::vector<double> measured = harmonic_magnitudes(spec, r_top);
  const HarmonicTable analytical =
      error_coefficients(s.amplitude, q, config.truncation, s.frequency_hz);

  const WaveformCheckOptions wopts{};
  const std::size_t crossings = crossing_events(q, s, s.period()).size();
  const double coverage = static_cast<double>(crossings) * 2.0 * wopts.window_fraction;
  CompareCheck check = config.check;
  if (check == CompareCheck::kAuto) {
    check = coverage <= 0.5 ? CompareCheck::kWaveform : CompareCheck::kSpectral;
  }
  const bool do_spectral = check == CompareCheck::kSpectral || check == CompareCheck::kBoth;
  const bool do_waveform = check == CompareCheck::kWaveform || check == CompareCheck::kBoth;

  const SpectralCheck sc = compare_harmonics(
      measured, analytical, s.amplitude, {config.floor_dbc, config.tolerance_db, 2});
  bool passed = true;
  json checks = json::object();
  if (do_spectral) {
    passed = passed && sc.passed;
    checks["spectral"] = {{"passed", sc.passed},
                          {"harmonics_compared", sc.included},
                          {"worst_harmonic", sc.worst_harmonic},
                          {"max_abs_delta_db", sc.max_abs_delta_db},
                          {"tolerance_db", config.tolerance_db},
                          {"floor_dbc", config.floor_dbc}};
  }
  if (do_waveform) {
    // One period at the configured density, capped to keep the check cheap.
    const std::size_t n = std::min<std::size_t>(config.grid / config.periods, 1u << 20);
    const WaveformCheck wc = check_reconstruction(s, q, analytical, std::max<std::size_t>(n, 2),
                                                  wopts);
    passed = passed && wc.passed;
    checks["waveform"] = {{"passed", wc.passed},
                          {"crossings", wc.crossings},
                          {"window_coverage", wc.coverage},
                          {"rms_outside_windows", wc.rms_outside},
                          {"rms_tolerance", wopts.rms_tolerance},
                          {"max_overshoot", wc.max_overshoot},
                          {"min_overshoot", wopts.min_overshoot}};
  }

  const SqnrMetrics m =
      sqnr_metrics(s, q, config.truncation.q_max, config.periods, config.grid);

  Output out(config);
  json rows = json::array();
  for (const auto& row : sc.rows) {
    rows.push_back({{"r", row.r},
                    {"measured_db", row.measured_db},
                    {"analytical_db", row.analytical_db},
                    {"delta_db", row.delta_db},
                    {"included", row.included}});
  }
  out.add(
      "comparison",
      [&](std::ostream& os) {
        os << "r,measured_db,analytical_db,delta_db,included\n";
        for (const auto& row : sc.rows) {
          os << row.r << ',' << io::format_real(row.measured_db) << ','
             << io::format_real(row.analytical_db) << ',' << io::format_real(row.delta_db) << ','
             << (row.included ? 1 : 0) << '\n';
        }
      },
      rows);

  const std::size_t half = spec.size() / 2;
  std::vector<double> freqs(half);
  std::vector<double> amps(half);
  const double scale = 2.0 / static_cast<double>(spec.size());
  for (std::size_t k = 0; k < half; ++k) {
    freqs[k] = spec.bin_frequency(k);
    amps[k] = std::abs(spec.bins[k]) * (k == 0 ? 0.5 * scale : scale);
  }
  // Input tone suppressed: the fundamental carries the analytical c_1 instead.
  const double c1 = analytical.at(1);
  amps[static_cast<std::size_t>(config.periods)] = std::abs(c1);
  out.add("spectrum_measured",
          [&](std::ostream& os) { io::write_spectrum_csv(os, freqs, amps); },
          json{{"freq_hz", freqs}, {"amplitude", amps}});

  const std::vector<SpectralLine> lines =
      spectral_lines(s.amplitude, s.frequency_hz, q, config.truncation);
  std::vector<double> lf(lines.size());
  std::vector<double> la(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    lf[i] = lines[i].frequency_hz;
    la[i] = lines[i].amplitude;
  }
  if (!la.empty()) la[0] = std::abs(c1);
  out.add("spectrum_analytical", [&](std::ostream& os) { io::write_spectrum_csv(os, lf, la); },
          json{{"freq_hz", lf}, {"amplitude", la}});

  CommandResult r;
  r.exit_code = passed ? kExitPass : kExitToleranceFailure;
  r.report = base_report("compare", config);
  r.report["files"] = out.files();
  r.report["check"] = std::string(to_string(check));
  r.report["checks"] = checks;
  r.report["sqnr"] = to_json(m);
  r.report["tone_suppressed"] = {{"freq_hz", s.frequency_hz},
                                 {"source", "analytical_c1"},
                                 {"c1", c1},
                                 {"measured_fundamental", measured.empty() ? 0.0 : measured[0]}};
  r.report["passed"] = passed;
  return r;
}

CommandResult cmd_sweep(const RunConfig& config) {
  config.validate();
  require(!config.amplitudes.empty(), "sweep", "a non-empty amplitude list");
  require_series_input(config.signal, "sweep");

  const std::size_t count = config.amplitudes.size();
  std::vector<SqnrMetrics> rows(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  // Each row is independent; results land by index so the output order is fixed.
  for (std::size_t start = 0; start < count; start += workers) {
    std::vector<std::future<SqnrMetrics>> batch;
    for (std::size_t i = start; i < std::min(count, start + workers); ++i) {
      SinusoidSpec s = config.signal;
      s.amplitude = config.amplitudes[i];
      batch.push_back(std::async(std::launch::async, [s, &config] {
        return sqnr_metrics(s, config.quantizer, config.truncation.q_max, config.periods,
                            config.grid);
      }));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) rows[start + k] = batch[k].get();
  }

  Output out(config);
  json jrows = json::array();
  for (const auto& m : rows) jrows.push_back(to_json(m));
  out.add(
      "sweep",
      [&](std::ostream& os) {
        os << "amplitude,measured_sqnr_db,analytical_sqnr_db,measured_error_power,"
              "analytical_error_power\n";
        for (const auto& m : rows) {
          os << io::format_real(m.amplitude) << ',' << io::format_real(m.measured_sqnr_db) << ','
             << io::format_real(m.analytical_sqnr_db) << ','
             << io::format_real(m.measured_error_power) << ','
             << io::format_real(m.analytical_error_power) << '\n';
        }
      },
      jrows);

  CommandResult r;
  r.report = base_report("sweep", config);
  r.report["files"] = out.files();
  r.report["rows"] = jrows;
  r.report["passed"] = true;
  return r;
}

CommandResult cmd_bessel_check(const RunConfig& config) {
  config.validate();
  require(!config.bessel_arguments.empty(), "bessel-check", "at least one argument x");

  struct Row {
    int order;
    double x, value, oracle, abs_err, tolerance;
  };
  std::vector<Row> rows;
  double worst_ratio = 0.0;
  double max_err = 0.0;
  for (double x : config.bessel_arguments) {
    const double tol = 1e-8 * std::max(1.0, bessel_envelope(x));
    for (int n = config.order_min; n <= config.order_max; ++n) {
      const double value = bessel_j(n, x);
      const double oracle = bessel_j_integral(n, x);
      const double err = std::abs(value - oracle);
      rows.push_back({n, x, value, oracle, err, tol});
      max_err = std::max(max_err, err);
      worst_ratio = std::max(worst_ratio, err / tol);
    }
  }

  Output out(config);
  json jrows = json::array();
  for (const auto& row : rows) {
    jrows.push_back({{"order", row.order},
                     {"x", row.x},
                     {"value", row.value},
                     {"oracle", row.oracle},
                     {"abs_err", row.abs_err}});
  }
  out.add(
      "bessel_check",
      [&](std::ostream& os) {
        os << "order,x,value,oracle,abs_err\n";
        for (const auto& row : rows) {
          os << row.order << ',' << io::format_real(row.x) << ',' << io::format_real(row.value)
             << ',' << io::format_real(row.oracle) << ',' << io::format_real(row.abs_err) << '\n';
        }
      },
      jrows);

  const bool passed = worst_ratio <= 1.0;
  CommandResult r;
  r.exit_code = passed ? kExitPass : kExitToleranceFailure;
  r.report = base_report("bessel-check", config);
  r.report["files"] = out.files();
  r.report["rows"] = rows.size();
  r.report["max_abs_err"] = max_err;
  r.report["worst_error_to_tolerance"] = worst_ratio;
  r.report["passed"] = passed;
  return r;
}

CommandResult run_command(std::string_view name, const RunConfig& config) {
  CommandResult r;
  try {
    if (name == "simulate") {
      r = cmd_simulate(config);
    } else if (name == "analyze") {
      r = cmd_analyze(config);
    } else if (name == "compare") {
      r = cmd_compare(config);
    } else if (name == "sweep") {
      r = cmd_sweep(config);
    } else if (name == "bessel-check") {
      r = cmd_bessel_check(config);
    } else {
      throw PreconditionError("command", "one of simulate, analyze, compare, sweep, bessel-check");
    }
    std::string stem(name);
    std::replace(stem.begin(), stem.end(), '-', '_');
    io::write_file(config.out_dir / (stem + "_report.json"), r.report.dump(2) + "\n");
  } catch (const std::exception& e) {
    r.exit_code = kExitConfigError;
    r.report = {{"schema_version", kSchemaVersion},
                {"command", std::string(name)},
                {"error", e.what()},
                {"passed", false}};
  }
  return r;
}

}  // namespace lcq
