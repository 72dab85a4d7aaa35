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

// End-to-end acceptance suite. Each numbered criterion prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>
#include <vector>

#include "heraldgate/report.hpp"
#include "heraldgate/rng.hpp"
#include "heraldgate/sweep.hpp"
#include "heraldgate/tomography.hpp"

namespace {

using namespace heraldgate;

int g_failures = 0;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int criterion, const char* summary, bool ok, double seconds) {
  std::printf("%s  criterion %d  %-58s (%.2f s)\n", ok ? "PASS" : "FAIL",
              criterion, summary, seconds);
  if (!ok) ++g_failures;
}

ErrorModel calibrated_model() {
  ErrorModel em;
  em.mode_overlap = 0.94;
  em.eps_det = 0.015;
  em.eps_sigma = 1.0 - std::sqrt(0.98);  // effective two-qubit weight 0.02
  em.p_false_herald = 0.01;
  return em;
}

DensityMatrix werner(double p) {
  const PureState psi = target_state(TargetClass::PsiMinus);
  CMatrix m = p * (psi.amplitudes() * psi.amplitudes().adjoint()) +
              (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix(std::move(m));
}

TomographyInput expected_counts_input(const DensityMatrix& rho, double scale) {
  TomographyInput input;
  for (BasisPair bp : all_basis_pairs()) {
    const auto p = outcome_probabilities(rho, bp, 0.0);
    CountRecord rec{bp, {}};
    for (int o = 0; o < 4; ++o)
      rec.counts[o] = static_cast<std::int64_t>(std::llround(p[o] * scale));
    input.records.push_back(rec);
  }
  return input;
}

DensityMatrix random_density_matrix(Rng& rng) {
  const auto gauss = [&rng]() {
    const double u = std::max(rng.uniform(), 1e-300);
    const double v = rng.uniform();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * v);
  };
  CMatrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(gauss(), gauss());
  CMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

// --- criterion 1: exact gate algebra on the four Bell rows ---------------

void criterion_gate_algebra() {
  const double t0 = now_seconds();
  bool ok = true;
  const auto& rows = reference_rows();
  for (int i = 0; i < 4; ++i) {
    const PureState q1 = prepare_qubit(rows[i].prep1);
    const PureState q2 = prepare_qubit(rows[i].prep2);
    const PureState expected = target_state(*rows[i].target);

    const GateOutput kraus = gate_kraus_apply(q1, q2);
    ok = ok && kraus.state.has_value();
    if (kraus.state.has_value()) {
      const double f = fidelity_pure(DensityMatrix::from_pure(*kraus.state),
                                     expected);
      ok = ok && std::abs(f - 1.0) < 1e-12;
    }

    const HeraldOutcome herald = herald_project(
        atom_photon_entangle(q1), atom_photon_entangle(q2), 1.0);
    ok = ok && herald.post_state.has_value();
    if (herald.post_state.has_value())
      ok = ok && std::abs(fidelity_pure(*herald.post_state, expected) - 1.0) <
                     1e-12;
  }
  report(1, "gate algebra reproduces the Bell-row targets exactly", ok,
         now_seconds() - t0);
}

// --- criterion 2: analytic herald probabilities --------------------------

void criterion_success_probabilities() {
  const double t0 = now_seconds();
  bool ok = true;
  for (const ReferenceRow& row : reference_rows()) {
    const double p = p_psi_minus(prepare_qubit(row.prep1),
                                 prepare_qubit(row.prep2));
    ok = ok && std::abs(p - row.p_psi_theory) < 1e-12;
  }
  report(2, "antisymmetric-state probabilities match the eight rows", ok,
         now_seconds() - t0);
}

// --- criterion 3: estimator oracle equivalence ----------------------------

void criterion_estimator_equivalence() {
  const double t0 = now_seconds();
  bool ok = true;
  Rng rng(20260810);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density_matrix(rng);
    std::map<BasisPair, BasisStats> stats;
    for (BasisPair bp : all_basis_pairs())
      stats[bp] = exact_basis_statistics(rho, bp);
    for (TargetClass t : kAllTargetClasses) {
      const double via_parities = fidelity_from_parities(t, stats).value;
      const double direct = fidelity_pure(rho, target_state(t));
      ok = ok && std::abs(via_parities - direct) < 1e-10;
    }
  }
  report(3, "parity estimators equal the exact fidelity on 100 random states",
         ok, now_seconds() - t0);
}

// --- criterion 4: rate budget ---------------------------------------------

void criterion_rate_budget() {
  const double t0 = now_seconds();
  const RateBudget budget;
  const double per_photon = per_photon_detection_prob(budget);
  const double squared = per_photon * per_photon;
  bool ok = std::abs(per_photon - 2.85e-4) < 1e-16;
  ok = ok && std::abs(squared - 8.1225e-8) < 1e-19;
  ok = ok && std::abs(squared - 8.5e-8) / 8.5e-8 < 0.05;
  ok = ok && std::abs(gate_success_probability(budget, 0.25) - 2.2e-8) /
                     2.2e-8 <
                 0.10;
  report(4, "per-photon 2.85e-4 and gate factor 8.1225e-8 as published", ok,
         now_seconds() - t0);
}

// --- criterion 5: tomography convergence ----------------------------------

void criterion_tomography_convergence() {
  const double t0 = now_seconds();
  const DensityMatrix truth =
      DensityMatrix::from_pure(target_state(TargetClass::PsiMinus));

  const ReconstructionResult exact =
      reconstruct_mle(expected_counts_input(truth, 1e6), 0.0);
  bool ok = fidelity_pure(exact.rho_hat, target_state(TargetClass::PsiMinus)) >
            0.9999;

  ExperimentConfig cfg = default_experiment_config();
  cfg.tomo_events = 601;
  const auto runs = tomography_seed_sweep(cfg, 1, 100, ExecMode::Parallel);
  int good = 0;
  for (const TomographyRun& r : runs)
    if (r.fidelity > 0.95) ++good;
  ok = ok && good >= 90;

  char summary[96];
  std::snprintf(summary, sizeof summary,
                "MLE: exact counts F>0.9999, ideal 601-event F>0.95 on %d/100",
                good);
  report(5, summary, ok, now_seconds() - t0);
}

// --- criterion 6: entanglement measures -----------------------------------

void criterion_entanglement_measures() {
  const double t0 = now_seconds();
  bool ok = true;
  for (int i = 0; i <= 20; ++i) {
    const double p = i / 20.0;
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    ok = ok && std::abs(concurrence(werner(p)) - expected) < 1e-10;
  }
  const double p_for_c077 = (2.0 * 0.77 + 1.0) / 3.0;
  const double ef = entanglement_of_formation(werner(p_for_c077));
  ok = ok && std::abs(ef - 0.682) < 1e-3;
  report(6, "Werner concurrence closed form and E_F(0.77) = 0.682(1)", ok,
         now_seconds() - t0);
}

// --- criterion 7: calibrated error budget ---------------------------------

void criterion_error_budget() {
  const double t0 = now_seconds();

  // One table draw at the published event counts scatters with sigma
  // ~0.013; average twenty seeded tables to compare the model's mean
  // fidelity against the published 0.90 +- 0.04 band.
  Table1Options opts;
  opts.error_model = calibrated_model();
  double mean = 0.0;
  for (int s = 0; s < 20; ++s) {
    opts.seed = 1 + 100 * static_cast<std::uint64_t>(s);
    mean += reproduce_table1(opts, ExecMode::Parallel).mean_fidelity;
  }
  mean /= 20.0;
  bool ok = std::abs(mean - kReferenceMeanFidelity) <= 0.04;

  ExperimentConfig cfg = default_experiment_config();
  cfg.error_model = calibrated_model();
  const auto runs = tomography_seed_sweep(cfg, 1, 100, ExecMode::Parallel);
  int in_band = 0;
  for (const TomographyRun& r : runs)
    if (r.fidelity >= 0.82 && r.fidelity <= 0.92) ++in_band;
  ok = ok && in_band > 50;

  char summary[96];
  std::snprintf(summary, sizeof summary,
                "calibrated mean F %.3f (ref 0.90 +- 0.04), tomo in band "
                "%d/100",
                mean, in_band);
  report(7, summary, ok, now_seconds() - t0);
}

// --- criterion 8: determinism ----------------------------------------------

void criterion_determinism() {
  const double t0 = now_seconds();
  bool ok = true;

  ExperimentConfig cfg = default_experiment_config();
  cfg.error_model = calibrated_model();
  cfg.seed = 77;
  ok = ok && emit_report(run_experiment(cfg), ReportFormat::Json) ==
                 emit_report(run_experiment(cfg), ReportFormat::Json);
  ok = ok && emit_report(run_experiment(cfg), ReportFormat::Csv) ==
                 emit_report(run_experiment(cfg), ReportFormat::Csv);

  Table1Options opts;
  opts.error_model = calibrated_model();
  opts.seed = 7;
  ok = ok && emit_table1_csv(reproduce_table1(opts, ExecMode::Parallel)) ==
                 emit_table1_csv(reproduce_table1(opts, ExecMode::Serial));

  ok = ok && emit_reconstruction_json(reproduce_tomography_dataset(cfg)) ==
                 emit_reconstruction_json(reproduce_tomography_dataset(cfg));

  report(8, "same seed reproduces byte-identical reports", ok,
         now_seconds() - t0);
}

}  // namespace

int main() {
  const double t0 = now_seconds();
  criterion_gate_algebra();
  criterion_success_probabilities();
  criterion_estimator_equivalence();
  criterion_rate_budget();
  criterion_tomography_convergence();
  criterion_entanglement_measures();
  criterion_error_budget();
  criterion_determinism();
  std::printf("%d/8 criteria passed (%.2f s total)\n", 8 - g_failures,
              now_seconds() - t0);
  return g_failures == 0 ? 0 : 1;
}
