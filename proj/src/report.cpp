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

#include "heraldgate/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace heraldgate {

namespace {

using Json = nlohmann::ordered_json;

// Rounds to six significant digits so emitted numbers are stable and
// compact; the rounded value is re-parsed to keep JSON output numeric.
double round6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::strtod(buf, nullptr);
}

std::string pair_label(BasisPair bp) {
  return std::string() + basis_letter(bp.b1) + basis_letter(bp.b2);
}

Json config_json(const ExperimentConfig& cfg) {
  Json j;
  j["prep"] = {{"theta1", round6(cfg.prep1.theta)},
               {"phi1", round6(cfg.prep1.phi)},
               {"theta2", round6(cfg.prep2.theta)},
               {"phi2", round6(cfg.prep2.phi)}};
  j["errors"] = {{"mode_overlap", round6(cfg.error_model.mode_overlap)},
                 {"eps_det", round6(cfg.error_model.eps_det)},
                 {"eps_sigma", round6(cfg.error_model.eps_sigma)},
                 {"p_false_herald", round6(cfg.error_model.p_false_herald)}};
  j["budget"] = {{"p_pi", round6(cfg.budget.p_pi)},
                 {"solid_angle_fraction", round6(cfg.budget.solid_angle_fraction)},
                 {"t_fiber", round6(cfg.budget.t_fiber)},
                 {"t_optics", round6(cfg.budget.t_optics)},
                 {"eta", round6(cfg.budget.eta)},
                 {"attempt_rate_hz", round6(cfg.budget.attempt_rate_hz)}};
  Json schedule = Json::array();
  for (const BasisSchedule& s : cfg.basis_schedule)
    schedule.push_back({{"basis", pair_label(s.basis)},
                        {"target_events", s.target_events}});
  j["run"] = {{"fast_mode", cfg.fast_mode},
              {"basis_schedule", schedule},
              {"attempt_cap", cfg.attempt_cap}};
  return j;
}

Json records_json(const std::vector<CountRecord>& records) {
  Json arr = Json::array();
  for (const CountRecord& r : records)
    arr.push_back({{"basis", pair_label(r.basis)},
                   {"counts", r.counts}});
  return arr;
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "basis,n_pp,n_pm,n_mp,n_mm\n";
    for (const CountRecord& r : report.records) {
      os << pair_label(r.basis);
      for (std::int64_t c : r.counts) os << ',' << c;
      os << '\n';
    }
    return os.str();
  }

  Json j;
  j["seed"] = report.config.seed;
  j["config"] = config_json(report.config);
  j["herald_stats"] = {
      {"attempts", report.herald_stats.attempts},
      {"heralds", report.herald_stats.heralds},
      {"false_heralds", report.herald_stats.false_heralds},
      {"empirical_p_psi_minus", round6(report.herald_stats.empirical_p_psi)}};
  j["records"] = records_json(report.records);
  Json fids = Json::array();
  for (const TargetFidelity& tf : report.fidelities)
    fids.push_back({{"target", target_name(tf.target)},
                    {"fidelity", round6(tf.estimate.value)},
                    {"std_error", round6(tf.estimate.std_error)}});
  j["fidelities"] = fids;
  return j.dump(2) + "\n";
}

std::string emit_table1_text(const Table1Result& result) {
  std::ostringstream os;
  char line[256];
  os << "row  input            events  F(sim)      F(ref)    P(sim)  P(ref)   "
        "P(theory)\n";
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const Table1Row& row = result.rows[i];
    std::string f_sim = "-", f_ref = "-";
    if (row.fidelity) {
      std::snprintf(line, sizeof line, "%.3f(%03.0f)", row.fidelity->value,
                    row.fidelity->std_error * 1000);
      f_sim = line;
    }
    if (row.reference.fidelity_ref) {
      std::snprintf(line, sizeof line, "%.2f(%.0f)", *row.reference.fidelity_ref,
                    *row.reference.fidelity_ref_err * 100);
      f_ref = line;
    }
    std::snprintf(line, sizeof line,
                  "%-4zu %-16s %6lld  %-11s %-9s %.3f   %.2f(%.0f)  %.3g\n",
                  i + 1, row.reference.label,
                  static_cast<long long>(row.report.herald_stats.heralds),
                  f_sim.c_str(), f_ref.c_str(),
                  row.report.herald_stats.empirical_p_psi,
                  row.reference.p_psi_ref, row.reference.p_psi_ref_err * 100,
                  row.reference.p_psi_theory);
    os << line;
  }
  char mean[128];
  std::snprintf(mean, sizeof mean,
                "mean fidelity (rows with a target): %.4f   reference mean: "
                "%.2f(2)\n",
                result.mean_fidelity, kReferenceMeanFidelity);
  os << mean;
  return os.str();
}

std::string emit_table1_csv(const Table1Result& result) {
  std::ostringstream os;
  os << "row,input,events,fidelity_sim,fidelity_sim_err,fidelity_ref,"
        "fidelity_ref_err,p_psi_sim,p_psi_ref,p_psi_ref_err,p_psi_theory\n";
  char buf[64];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const Table1Row& row = result.rows[i];
    os << (i + 1) << ',' << row.reference.label << ','
       << row.report.herald_stats.heralds << ',';
    if (row.fidelity)
      os << num(row.fidelity->value) << ',' << num(row.fidelity->std_error);
    else
      os << ',';
    os << ',';
    if (row.reference.fidelity_ref)
      os << num(*row.reference.fidelity_ref) << ','
         << num(*row.reference.fidelity_ref_err);
    else
      os << ',';
    os << ',' << num(row.report.herald_stats.empirical_p_psi) << ','
       << num(row.reference.p_psi_ref) << ',' << num(row.reference.p_psi_ref_err)
       << ',' << num(row.reference.p_psi_theory) << '\n';
  }
  return os.str();
}

std::string emit_reconstruction_json(const TomographyRun& run) {
  const CMatrix& m = run.result.rho_hat.entries();
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json re_row = Json::array(), im_row = Json::array();
    for (int j = 0; j < 4; ++j) {
      re_row.push_back(round6(m(i, j).real()));
      im_row.push_back(round6(m(i, j).imag()));
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  Json j;
  j["rho"] = {{"re", re}, {"im", im}};
  j["fidelity"] = round6(run.fidelity);
  j["concurrence"] = round6(run.concurrence);
  j["entanglement_of_formation"] = round6(run.entanglement_of_formation);
  j["log_likelihood"] = round6(run.result.log_likelihood);
  j["converged"] = run.result.converged;
  j["iterations"] = run.result.iterations;
  j["total_events"] = run.input.total_events();
  return j.dump(2) + "\n";
}

std::string emit_reconstruction_plot_csv(const TomographyRun& run) {
  const CMatrix& m = run.result.rho_hat.entries();
  std::ostringstream os;
  os << "row,col,re,im\n";
  char buf[64];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.6g,%.6g\n", i, j,
                    m(i, j).real(), m(i, j).imag());
      os << buf;
    }
  return os.str();
}

std::string emit_rates_text(const RateBudget& budget) {
  const double per_photon = per_photon_detection_prob(budget);
  std::ostringstream os;
  char buf[160];
  os << "photon collection/detection budget\n";
  std::snprintf(buf, sizeof buf, "  p_pi                 %.6g\n", budget.p_pi);
  os << buf;
  std::snprintf(buf, sizeof buf, "  solid_angle_fraction %.6g\n",
                budget.solid_angle_fraction);
  os << buf;
  std::snprintf(buf, sizeof buf, "  t_fiber              %.6g\n", budget.t_fiber);
  os << buf;
  std::snprintf(buf, sizeof buf, "  t_optics             %.6g\n", budget.t_optics);
  os << buf;
  std::snprintf(buf, sizeof buf, "  eta                  %.6g\n", budget.eta);
  os << buf;
  std::snprintf(buf, sizeof buf, "per-photon detection probability: %.6g\n",
                per_photon);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "P_gate / P_psi_minus (squared photon probability): %.6g\n",
                per_photon * per_photon);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "P_gate at P_psi_minus = 1/4: %.6g    at 1/2: %.6g\n",
                gate_success_probability(budget, 0.25),
                gate_success_probability(budget, 0.5));
  os << buf;
  if (budget.attempt_rate_hz > 0.0) {
    std::snprintf(buf, sizeof buf,
                  "expected events per hour at P_psi_minus = 1/4: %.6g\n",
                  expected_events(budget, 0.25, 3600.0));
    os << buf;
  }
  return os.str();
}

}  // namespace heraldgate
