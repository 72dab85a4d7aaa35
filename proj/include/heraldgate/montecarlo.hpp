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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heraldgate/measurement.hpp"
#include "heraldgate/noise.hpp"
#include "heraldgate/parallel.hpp"
#include "heraldgate/rates.hpp"
#include "heraldgate/tomography.hpp"

namespace heraldgate {

struct BasisSchedule {
  BasisPair basis;
  std::int64_t target_events = 0;
};

// One seeded end-to-end experiment: attempt loop, heralding, basis-rotated
// outcome sampling. The seed fully determines every draw; identical
// configs produce identical reports.
struct ExperimentConfig {
  PrepSetting prep1{};
  PrepSetting prep2{};
  ErrorModel error_model{};
  RateBudget budget{};
  std::vector<BasisSchedule> basis_schedule;
  std::uint64_t seed = 0;

  // fast_mode skips photon-loss sampling and heralds directly with the
  // conditional coincidence probability; the physical-rate scaling is
  // covered analytically by the rate budget. With fast_mode off, each
  // photon must additionally survive an independent detection draw.
  bool fast_mode = true;

  std::int64_t attempt_cap = 20'000'000;

  // Tomography driver settings (see reproduce_tomography_dataset).
  std::int64_t tomo_events = 601;
  bool tomo_calibrated = false;

  void validate() const;
};

ExperimentConfig default_experiment_config();

struct HeraldStats {
  std::int64_t attempts = 0;
  std::int64_t heralds = 0;
  std::int64_t false_heralds = 0;
  double empirical_p_psi = 0.0;
};

struct TargetFidelity {
  TargetClass target;
  FidelityEstimate estimate;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<CountRecord> records;
  HeraldStats herald_stats;
  std::vector<TargetFidelity> fidelities;
};

// Raised when a run cannot reach its scheduled events within attempt_cap
// (e.g. annihilated inputs with no false-herald channel).
struct NoProgressError : std::runtime_error {
  explicit NoProgressError(const std::string& msg, std::int64_t made)
      : std::runtime_error(msg), attempts_made(made) {}
  std::int64_t attempts_made = 0;
};

// Runs attempts until every scheduled basis reaches its target events.
// Heralds are assigned to bases round-robin (cycling over the bases that
// still need events). Draw order per attempt: photon-survival draws (only
// with fast_mode off), herald draw; per herald: false/true branch draw,
// outcome draw. Throws NoProgressError at the attempt cap.
RunReport run_experiment(const ExperimentConfig& cfg);

// One row of the reference gate-characterization table: input
// preparations, expected target, analysis bases, event count, and the
// published comparison values.
struct ReferenceRow {
  const char* label;        // e.g. "|0+1> x |0+1>"
  PrepSetting prep1, prep2;
  std::optional<TargetClass> target;  // absent for the annihilated row
  std::vector<BasisPair> bases;
  std::int64_t events;
  std::optional<double> fidelity_ref;      // published measured fidelity
  std::optional<double> fidelity_ref_err;
  double p_psi_ref;                        // published measured P_psi-
  double p_psi_ref_err;
  double p_psi_theory;
};

// The eight reference rows with their published event counts
// (210, 179, 178, 188, 42, 52, 48, 65).
const std::vector<ReferenceRow>& reference_rows();

// Published average gate fidelity over the first seven rows: 0.90(2).
inline constexpr double kReferenceMeanFidelity = 0.90;

struct Table1Options {
  ErrorModel error_model{};
  RateBudget budget{};
  std::uint64_t seed = 0;
  bool fast_mode = true;
  std::int64_t attempt_cap = 20'000'000;
  // Event targets per row; defaults to the published counts.
  std::optional<std::array<std::int64_t, 8>> events_override;
};

struct Table1Row {
  ReferenceRow reference;
  RunReport report;
  std::optional<FidelityEstimate> fidelity;  // simulated
  bool annihilated = false;  // herald probability was exactly zero
};

struct Table1Result {
  std::vector<Table1Row> rows;
  // Mean simulated fidelity over the rows that define one.
  double mean_fidelity = 0.0;
};

// Reproduces the eight-row characterization run. Rows are independent and
// fan out over the Parallel lane when requested. A row whose herald
// probability is exactly zero (annihilated input, no false heralds) is
// reported with zero heralds at the attempt cap instead of failing.
Table1Result reproduce_table1(const Table1Options& opts,
                              ExecMode mode = ExecMode::Serial);

struct TomographyRun {
  TomographyInput input;
  ReconstructionResult result;
  double fidelity = 0.0;      // to the antisymmetric Bell state
  double concurrence = 0.0;
  double entanglement_of_formation = 0.0;
};

// Prepares both ions in (|0>+|1>)/sqrt(2), collects cfg.tomo_events
// heralds over all nine bases (each of the first eight bases receives
// round(N/9) events and the last the remainder, falling back to an even
// split when that would starve it), and reconstructs the state. With
// cfg.tomo_calibrated the detection-flip rate is folded into the
// likelihood; otherwise the reconstruction is raw (eps_det = 0).
TomographyRun reproduce_tomography_dataset(const ExperimentConfig& cfg);

// Basis schedule used by reproduce_tomography_dataset (exposed for tests).
std::vector<BasisSchedule> tomography_schedule(std::int64_t total_events);

}  // namespace heraldgate
