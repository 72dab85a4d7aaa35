// Copyright 2026 The heraldgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: simulate | table1 | tomo | rates.
//
// Exit codes: 0 success, 2 configuration/usage error, 1 runtime failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "heraldgate/config.hpp"
#include "heraldgate/report.hpp"
#include "heraldgate/sweep.hpp"

namespace {

using namespace heraldgate;

constexpr const char* kConfigEnvVar = "HERALDGATE_CONFIG";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

// Loads the config from the explicit path, the environment default, or
// falls back to the built-in defaults (equivalent to an empty file).
ExperimentConfig load_config(const std::optional<std::string>& path) {
  if (path) return parse_config(read_file(*path));
  if (const char* env = std::getenv(kConfigEnvVar))
    return parse_config(read_file(env));
  return parse_config("");
}

// A tomo input file is a config if it contains a section header or a
// key = value line; otherwise it is a count-record file.
bool looks_like_config(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    return line[first] == '[' || line.find('=') != std::string::npos;
  }
  return false;
}

int run_simulate(const std::optional<std::string>& config_path,
                 const std::string& out_path, const std::string& counts_path,
                 bool csv) {
  const ExperimentConfig cfg = load_config(config_path);
  const RunReport report = run_experiment(cfg);
  const std::string payload =
      emit_report(report, csv ? ReportFormat::Csv : ReportFormat::Json);
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
  if (!counts_path.empty()) {
    std::ostringstream os;
    write_count_records(os, report.records);
    write_file(counts_path, os.str());
  }
  return 0;
}

int run_table1(const std::optional<std::string>& config_path,
               const std::string& csv_path, bool parallel) {
  const ExperimentConfig cfg = load_config(config_path);
  Table1Options opts;
  opts.error_model = cfg.error_model;
  opts.budget = cfg.budget;
  opts.seed = cfg.seed;
  opts.fast_mode = cfg.fast_mode;
  opts.attempt_cap = cfg.attempt_cap;
  const Table1Result result = reproduce_table1(
      opts, parallel ? ExecMode::Parallel : ExecMode::Serial);
  std::cout << emit_table1_text(result);
  if (!csv_path.empty()) write_file(csv_path, emit_table1_csv(result));
  return 0;
}

int run_tomo(const std::string& input_path, const std::string& out_path,
             const std::string& plot_path) {
  std::optional<TomographyRun> run;
  if (input_path.empty()) {
    const ExperimentConfig cfg = load_config(std::nullopt);
    run = reproduce_tomography_dataset(cfg);
  } else {
    const std::string text = read_file(input_path);
    if (looks_like_config(text)) {
      run = reproduce_tomography_dataset(parse_config(text));
    } else {
      std::istringstream in(text);
      TomographyInput input{parse_count_records(in)};
      ReconstructionResult result = reconstruct_mle(input, 0.0);
      const double fid =
          fidelity_pure(result.rho_hat, target_state(TargetClass::PsiMinus));
      const double conc = concurrence(result.rho_hat);
      const double eof = entanglement_of_formation(result.rho_hat);
      run = TomographyRun{std::move(input), std::move(result), fid, conc, eof};
    }
  }
  const std::string payload = emit_reconstruction_json(*run);
  if (out_path.empty())
    std::cout << payload;
  else
    write_file(out_path, payload);
  if (!plot_path.empty())
    write_file(plot_path, emit_reconstruction_plot_csv(*run));
  return 0;
}

int run_rates(const std::optional<std::string>& config_path) {
  const ExperimentConfig cfg = load_config(config_path);
  std::cout << emit_rates_text(cfg.budget);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for the photon-heralded entangling gate between "
               "two remote trapped-ion qubits"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::string out_path, counts_path, csv_path, plot_path, tomo_input;
  bool csv = false;
  bool parallel = false;

  auto* simulate = app.add_subcommand(
      "simulate", "Run one seeded experiment and emit its report");
  simulate->add_option("config", config_path, "Config file (INI)");
  simulate->add_option("--out", out_path, "Write the report here instead of stdout");
  simulate->add_option("--counts", counts_path, "Also write count records (text format)");
  simulate->add_flag("--csv", csv, "Emit CSV instead of JSON");

  auto* table1 = app.add_subcommand(
      "table1", "Reproduce the eight-row gate characterization table");
  table1->add_option("config", config_path, "Config file (INI)");
  table1->add_option("--csv", csv_path, "Also write the table as CSV");
  table1->add_flag("--parallel", parallel, "Fan rows out over OpenMP threads");

  auto* tomo = app.add_subcommand(
      "tomo", "Reconstruct a density matrix (from a config or a counts file)");
  tomo->add_option("input", tomo_input, "Config file or count-record file");
  tomo->add_option("--out", out_path, "Write the JSON here instead of stdout");
  tomo->add_option("--plot-data", plot_path, "Write matrix bar-chart data (CSV)");

  auto* rates = app.add_subcommand(
      "rates", "Print the success-probability budget breakdown");
  rates->add_option("config", config_path, "Config file (INI)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed())
      return run_simulate(config_path, out_path, counts_path, csv);
    if (table1->parsed()) return run_table1(config_path, csv_path, parallel);
    if (tomo->parsed()) return run_tomo(tomo_input, out_path, plot_path);
    if (rates->parsed()) return run_rates(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
