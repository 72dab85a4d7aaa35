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

// Times the serial reference lane against the OpenMP lane on the two
// calibration workloads: multi-seed experiment sweeps and multi-seed
// tomography reconstructions. Both lanes must produce identical results;
// the benchmark asserts that while timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "heraldgate/parallel.hpp"
#include "heraldgate/report.hpp"
#include "heraldgate/sweep.hpp"

namespace {

using namespace heraldgate;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

ErrorModel calibrated_model() {
  ErrorModel em;
  em.mode_overlap = 0.94;
  em.eps_det = 0.015;
  em.eps_sigma = 0.010050506338833466;  // effective two-qubit weight 0.02
  em.p_false_herald = 0.01;
  return em;
}

template <typename F>
double timed(F&& fn) {
  const double t0 = now_seconds();
  fn();
  return now_seconds() - t0;
}

void report(const char* name, double serial_s, double parallel_s) {
  std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %.2fx\n", name,
              serial_s, parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  const int seeds = argc > 1 ? std::atoi(argv[1]) : 100;
  std::printf("threads available: %d, seeds per workload: %d\n",
              parallel_thread_count(), seeds);

  ExperimentConfig cfg = default_experiment_config();
  cfg.error_model = calibrated_model();
  // Heavier schedule than the reference table so each run is worth timing.
  for (BasisSchedule& s : cfg.basis_schedule) s.target_events = 20000;

  std::vector<RunReport> runs_serial, runs_parallel;
  const double t_runs_serial = timed([&] {
    runs_serial = run_seed_sweep(cfg, 1, seeds, ExecMode::Serial);
  });
  const double t_runs_parallel = timed([&] {
    runs_parallel = run_seed_sweep(cfg, 1, seeds, ExecMode::Parallel);
  });
  for (int i = 0; i < seeds; ++i) {
    if (emit_report(runs_serial[i], ReportFormat::Json) !=
        emit_report(runs_parallel[i], ReportFormat::Json)) {
      std::fprintf(stderr, "lane mismatch in run sweep at seed %d\n", i);
      return 1;
    }
  }
  report("experiment seed sweep", t_runs_serial, t_runs_parallel);

  ExperimentConfig tomo_cfg = default_experiment_config();
  tomo_cfg.error_model = calibrated_model();
  tomo_cfg.tomo_events = 6010;

  std::vector<TomographyRun> tomo_serial, tomo_parallel;
  const double t_tomo_serial = timed([&] {
    tomo_serial = tomography_seed_sweep(tomo_cfg, 1, seeds, ExecMode::Serial);
  });
  const double t_tomo_parallel = timed([&] {
    tomo_parallel = tomography_seed_sweep(tomo_cfg, 1, seeds, ExecMode::Parallel);
  });
  for (int i = 0; i < seeds; ++i) {
    if (emit_reconstruction_json(tomo_serial[i]) !=
        emit_reconstruction_json(tomo_parallel[i])) {
      std::fprintf(stderr, "lane mismatch in tomography sweep at seed %d\n", i);
      return 1;
    }
  }
  report("tomography seed sweep", t_tomo_serial, t_tomo_parallel);
  return 0;
}
