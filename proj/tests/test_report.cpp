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

#include <algorithm>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "heraldgate/report.hpp"

using namespace heraldgate;

namespace {

RunReport sample_report() {
  ExperimentConfig cfg = default_experiment_config();
  cfg.seed = 987654321;
  return run_experiment(cfg);
}

}  // namespace

TEST_CASE("JSON report round-trips its scalars") {
  const RunReport report = sample_report();
  const std::string payload = emit_report(report, ReportFormat::Json);
  const auto parsed = nlohmann::json::parse(payload);

  CHECK(parsed["seed"].get<std::uint64_t>() == 987654321);
  CHECK(parsed["herald_stats"]["attempts"].get<std::int64_t>() ==
        report.herald_stats.attempts);
  CHECK(parsed["herald_stats"]["heralds"].get<std::int64_t>() ==
        report.herald_stats.heralds);
  CHECK(parsed["records"].size() == report.records.size());
  CHECK(parsed["config"]["budget"]["eta"].get<double>() == 0.15);
  REQUIRE(parsed["fidelities"].size() == 1);
  CHECK(parsed["fidelities"][0]["target"].get<std::string>() == "psi_minus");
}

TEST_CASE("CSV report has one row per basis plus a header") {
  const RunReport report = sample_report();
  const std::string csv = emit_report(report, ReportFormat::Csv);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == static_cast<long>(report.records.size()) + 1);
  CHECK(csv.rfind("basis,n_pp,n_pm,n_mp,n_mm\n", 0) == 0);
}

TEST_CASE("rates text prints the budget breakdown") {
  const std::string text = emit_rates_text(RateBudget{});
  CHECK(text.find("0.000285") != std::string::npos);
  CHECK(text.find("8.1225e-08") != std::string::npos);
}

TEST_CASE("reconstruction emission") {
  ExperimentConfig cfg = default_experiment_config();
  cfg.seed = 5;
  const TomographyRun run = reproduce_tomography_dataset(cfg);

  const std::string payload = emit_reconstruction_json(run);
  const auto parsed = nlohmann::json::parse(payload);
  CHECK(parsed["rho"]["re"].size() == 4);
  CHECK(parsed["rho"]["im"][0].size() == 4);
  CHECK(parsed["total_events"].get<std::int64_t>() == 601);
  CHECK(parsed["fidelity"].get<double>() == doctest::Approx(run.fidelity).epsilon(1e-5));

  const std::string plot = emit_reconstruction_plot_csv(run);
  CHECK(std::count(plot.begin(), plot.end(), '\n') == 17);  // header + 16 entries
}

TEST_CASE("emitted floats are stable at six significant digits") {
  const RunReport report = sample_report();
  const std::string a = emit_report(report, ReportFormat::Json);
  const std::string b = emit_report(report, ReportFormat::Json);
  CHECK(a == b);
  CHECK(a.find("1.5708") != std::string::npos);  // theta = pi/2 at 6 digits
  CHECK(a.find("1.570796") == std::string::npos);
}
