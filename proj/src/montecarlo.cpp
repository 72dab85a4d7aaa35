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

#include "heraldgate/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "heraldgate/rng.hpp"

namespace heraldgate {

namespace {

constexpr double kProbFloor = 1e-14;
constexpr double kPi = std::numbers::pi;

// Pre-squared conditional branch data for one run: everything about a
// heralding attempt that does not depend on the random stream.
struct HeraldModel {
  double p_cc = 0.0;        // true-coincidence probability
  double p_tot = 0.0;       // herald probability per (photon-bearing) attempt
  double p_false_branch = 0.0;  // fraction of heralds that are false
  std::optional<DensityMatrix> true_state;   // sigma-leaked post state
  std::optional<DensityMatrix> false_state;  // dark-count post state
};

HeraldModel build_herald_model(const PureState& q1, const PureState& q2,
                               const ErrorModel& em) {
  HeraldModel hm;
  const HeraldOutcome base = herald_project(
      atom_photon_entangle(q1), atom_photon_entangle(q2), em.mode_overlap);
  hm.p_cc = base.coincidence_probability;
  const double pf = em.p_false_herald;
  hm.p_tot = hm.p_cc * (1.0 - pf) + pf;
  if (base.post_state.has_value())
    hm.true_state = apply_sigma_leak(*base.post_state, em.eps_sigma);
  if (pf > 0.0) hm.false_state = false_herald_state(q1, q2);
  hm.p_false_branch = hm.p_tot > 0.0 ? pf / hm.p_tot : 0.0;
  return hm;
}

int sample_outcome(const std::array<double, 4>& probs, Rng& rng) {
  return rng.categorical(std::span<const double>(probs.data(), 4));
}

}  // namespace

void ExperimentConfig::validate() const {
  error_model.validate();
  budget.validate();
  if (basis_schedule.empty())
    throw std::invalid_argument("ExperimentConfig: basis schedule is empty");
  for (const BasisSchedule& s : basis_schedule) {
    if (s.target_events <= 0)
      throw std::invalid_argument(
          "ExperimentConfig: every scheduled basis needs target_events > 0");
  }
  if (attempt_cap <= 0)
    throw std::invalid_argument("ExperimentConfig: attempt_cap must be > 0");
  if (tomo_events < 16)
    throw std::invalid_argument("ExperimentConfig: tomo_events must be >= 16");
}

ExperimentConfig default_experiment_config() {
  ExperimentConfig cfg;
  cfg.prep1 = PrepSetting{kPi / 2.0, 0.0};
  cfg.prep2 = PrepSetting{kPi / 2.0, 0.0};
  cfg.basis_schedule = {
      {{Basis::X, Basis::X}, 70},
      {{Basis::Y, Basis::Y}, 70},
      {{Basis::Z, Basis::Z}, 70},
  };
  return cfg;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();

  const PureState q1 = prepare_qubit(cfg.prep1);
  const PureState q2 = prepare_qubit(cfg.prep2);
  const HeraldModel hm = build_herald_model(q1, q2, cfg.error_model);

  RunReport report;
  report.config = cfg;
  report.records.reserve(cfg.basis_schedule.size());
  for (const BasisSchedule& s : cfg.basis_schedule)
    report.records.push_back(CountRecord{s.basis, {0, 0, 0, 0}});

  const double q_photon =
      cfg.fast_mode ? 1.0 : per_photon_detection_prob(cfg.budget);

  if (hm.p_tot < kProbFloor || (!cfg.fast_mode && q_photon <= 0.0)) {
    std::ostringstream os;
    os << "run_experiment: herald probability is "
       << hm.p_tot * q_photon * q_photon
       << "; no progress possible within " << cfg.attempt_cap << " attempts";
    throw NoProgressError(os.str(), cfg.attempt_cap);
  }

  // Conditional outcome tables per scheduled basis and branch.
  std::vector<std::array<double, 4>> true_probs, false_probs;
  for (const BasisSchedule& s : cfg.basis_schedule) {
    true_probs.push_back(
        hm.true_state ? outcome_probabilities(*hm.true_state, s.basis,
                                              cfg.error_model.eps_det)
                      : std::array<double, 4>{});
    false_probs.push_back(
        hm.false_state ? outcome_probabilities(*hm.false_state, s.basis,
                                               cfg.error_model.eps_det)
                       : std::array<double, 4>{});
  }

  Rng rng(cfg.seed);
  std::vector<std::int64_t> remaining;
  for (const BasisSchedule& s : cfg.basis_schedule)
    remaining.push_back(s.target_events);
  std::int64_t open_bases = static_cast<std::int64_t>(remaining.size());
  std::size_t cursor = 0;  // round-robin over bases that still need events

  HeraldStats stats;
  while (open_bases > 0) {
    if (stats.attempts >= cfg.attempt_cap) {
      std::ostringstream os;
      os << "run_experiment: attempt cap " << cfg.attempt_cap
         << " reached with " << stats.heralds << " heralds collected";
      throw NoProgressError(os.str(), stats.attempts);
    }
    ++stats.attempts;

    if (!cfg.fast_mode) {
      const bool photon1 = rng.bernoulli(q_photon);
      const bool photon2 = rng.bernoulli(q_photon);
      if (!photon1 || !photon2) continue;
    }
    if (!rng.bernoulli(hm.p_tot)) continue;

    ++stats.heralds;
    bool is_false;
    if (!hm.true_state)
      is_false = true;  // only the dark-count branch can fire
    else if (!hm.false_state)
      is_false = false;
    else
      is_false = rng.bernoulli(hm.p_false_branch);
    if (is_false) ++stats.false_heralds;

    while (remaining[cursor] == 0) cursor = (cursor + 1) % remaining.size();
    const auto& probs = is_false ? false_probs[cursor] : true_probs[cursor];
    const int outcome = sample_outcome(probs, rng);
    ++report.records[cursor].counts[outcome];
    if (--remaining[cursor] == 0) --open_bases;
    cursor = (cursor + 1) % remaining.size();
  }

  const double herald_fraction = static_cast<double>(stats.heralds) /
                                 static_cast<double>(stats.attempts);
  stats.empirical_p_psi =
      cfg.fast_mode ? herald_fraction : herald_fraction / (q_photon * q_photon);
  report.herald_stats = stats;

  // Fidelity estimates for the target classes the schedule can resolve and
  // the ideal gate output actually matches.
  const GateOutput ideal = gate_kraus_apply(q1, q2);
  if (ideal.state.has_value()) {
    const DensityMatrix ideal_rho = DensityMatrix::from_pure(*ideal.state);
    std::map<BasisPair, BasisStats> stats_map;
    for (const CountRecord& r : report.records)
      if (r.total() > 0) stats_map.emplace(r.basis, basis_statistics(r));
    for (TargetClass t : kAllTargetClasses) {
      if (fidelity_pure(ideal_rho, target_state(t)) < 0.99) continue;
      const auto bases = required_bases(t);
      const bool covered = std::all_of(
          bases.begin(), bases.end(),
          [&](BasisPair bp) { return stats_map.contains(bp); });
      if (!covered) continue;
      report.fidelities.push_back(
          TargetFidelity{t, fidelity_from_parities(t, stats_map)});
    }
  }
  return report;
}

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = [] {
    const PrepSetting zero{0.0, 0.0};
    const PrepSetting one{kPi, 0.0};
    const PrepSetting plus{kPi / 2.0, 0.0};
    const PrepSetting plus_i{kPi / 2.0, kPi / 2.0};
    const PrepSetting minus{kPi / 2.0, kPi};
    const PrepSetting minus_i{kPi / 2.0, 3.0 * kPi / 2.0};
    const std::vector<BasisPair> xx_yy_zz = {
        {Basis::X, Basis::X}, {Basis::Y, Basis::Y}, {Basis::Z, Basis::Z}};
    const std::vector<BasisPair> xy_yx_zz = {
        {Basis::X, Basis::Y}, {Basis::Y, Basis::X}, {Basis::Z, Basis::Z}};
    const std::vector<BasisPair> zz = {{Basis::Z, Basis::Z}};

    std::vector<ReferenceRow> r;
    r.push_back({"|0+1> x |0+1>", plus, plus, TargetClass::PsiMinus, xx_yy_zz,
                 210, 0.89, 0.02, 0.26, 0.01, 0.25});
    r.push_back({"|0+i> x |0+1>", plus_i, plus, TargetClass::PsiMinusI,
                 xy_yx_zz, 179, 0.86, 0.02, 0.26, 0.01, 0.25});
    r.push_back({"|0-1> x |0+1>", minus, plus, TargetClass::PsiPlus, xx_yy_zz,
                 178, 0.85, 0.01, 0.22, 0.02, 0.25});
    r.push_back({"|0-i> x |0+1>", minus_i, plus, TargetClass::PsiPlusI,
                 xy_yx_zz, 188, 0.81, 0.02, 0.27, 0.02, 0.25});
    r.push_back({"|0+1> x |1>", plus, one, TargetClass::ZeroOne, zz, 42, 0.86,
                 0.05, 0.24, 0.04, 0.25});
    r.push_back({"|0> x |0+1>", zero, plus, TargetClass::ZeroOne, zz, 52, 0.90,
                 0.04, 0.20, 0.03, 0.25});
    r.push_back({"|0> x |1>", zero, one, TargetClass::ZeroOne, zz, 48, 0.98,
                 0.02, 0.39, 0.06, 0.5});
    r.push_back({"|0> x |0>", zero, zero, std::nullopt, zz, 65, std::nullopt,
                 std::nullopt, 0.04, 0.01, 0.0});
    return r;
  }();
  return rows;
}

Table1Result reproduce_table1(const Table1Options& opts, ExecMode mode) {
  const auto& rows = reference_rows();
  Table1Result result;
  result.rows.resize(rows.size());

  parallel_for_index(static_cast<std::int64_t>(rows.size()), mode,
                     [&](std::int64_t i) {
    const ReferenceRow& ref = rows[i];
    Table1Row out;
    out.reference = ref;

    ExperimentConfig cfg;
    cfg.prep1 = ref.prep1;
    cfg.prep2 = ref.prep2;
    cfg.error_model = opts.error_model;
    cfg.budget = opts.budget;
    cfg.fast_mode = opts.fast_mode;
    cfg.attempt_cap = opts.attempt_cap;
    cfg.seed = opts.seed + static_cast<std::uint64_t>(i);

    const std::int64_t events =
        opts.events_override ? (*opts.events_override)[i] : ref.events;
    // Split the row's events across its bases as evenly as possible; the
    // leading bases absorb the remainder.
    const auto n_bases = static_cast<std::int64_t>(ref.bases.size());
    for (std::int64_t b = 0; b < n_bases; ++b) {
      const std::int64_t share =
          events / n_bases + (b < events % n_bases ? 1 : 0);
      if (share > 0)
        cfg.basis_schedule.push_back(BasisSchedule{ref.bases[b], share});
    }

    try {
      out.report = run_experiment(cfg);
    } catch (const NoProgressError& e) {
      // Annihilated input: report the capped attempts with zero heralds.
      out.annihilated = true;
      out.report.config = cfg;
      for (const BasisSchedule& s : cfg.basis_schedule)
        out.report.records.push_back(CountRecord{s.basis, {0, 0, 0, 0}});
      out.report.herald_stats =
          HeraldStats{e.attempts_made, 0, 0, 0.0};
    }

    if (ref.target.has_value()) {
      for (const TargetFidelity& tf : out.report.fidelities)
        if (tf.target == *ref.target) out.fidelity = tf.estimate;
    }
    result.rows[i] = std::move(out);
  });

  double sum = 0.0;
  int n = 0;
  for (const Table1Row& row : result.rows) {
    if (row.fidelity.has_value()) {
      sum += row.fidelity->value;
      ++n;
    }
  }
  result.mean_fidelity = n > 0 ? sum / n : 0.0;
  return result;
}

std::vector<BasisSchedule> tomography_schedule(std::int64_t total_events) {
  if (total_events < 16)
    throw std::invalid_argument("tomography_schedule: need at least 16 events");
  const auto pairs = all_basis_pairs();
  const std::int64_t n = static_cast<std::int64_t>(pairs.size());
  std::vector<BasisSchedule> schedule;

  const std::int64_t head =
      static_cast<std::int64_t>(std::llround(static_cast<double>(total_events) / n));
  const std::int64_t tail = total_events - head * (n - 1);
  if (head > 0 && tail > 0) {
    for (std::int64_t i = 0; i < n - 1; ++i)
      schedule.push_back(BasisSchedule{pairs[i], head});
    schedule.push_back(BasisSchedule{pairs[n - 1], tail});
  } else {
    // Even split with the remainder spread over the leading bases.
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int64_t share =
          total_events / n + (i < total_events % n ? 1 : 0);
      schedule.push_back(BasisSchedule{pairs[i], std::max<std::int64_t>(share, 1)});
    }
  }
  return schedule;
}

TomographyRun reproduce_tomography_dataset(const ExperimentConfig& cfg) {
  ExperimentConfig run_cfg = cfg;
  run_cfg.prep1 = PrepSetting{kPi / 2.0, 0.0};
  run_cfg.prep2 = PrepSetting{kPi / 2.0, 0.0};
  run_cfg.basis_schedule = tomography_schedule(cfg.tomo_events);
  const RunReport report = run_experiment(run_cfg);

  TomographyInput input{report.records};
  const double eps_fit = cfg.tomo_calibrated ? cfg.error_model.eps_det : 0.0;
  ReconstructionResult result = reconstruct_mle(input, eps_fit);
  const double fid =
      fidelity_pure(result.rho_hat, target_state(TargetClass::PsiMinus));
  const double conc = concurrence(result.rho_hat);
  const double eof = entanglement_of_formation(result.rho_hat);
  return TomographyRun{std::move(input), std::move(result), fid, conc, eof};
}

}  // namespace heraldgate
