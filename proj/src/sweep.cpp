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

#include "heraldgate/sweep.hpp"

namespace heraldgate {

std::vector<RunReport> run_seed_sweep(const ExperimentConfig& base,
                                      std::uint64_t first_seed, int count,
                                      ExecMode mode) {
  std::vector<RunReport> out(count);
  parallel_for_index(count, mode, [&](std::int64_t i) {
    ExperimentConfig cfg = base;
    cfg.seed = first_seed + static_cast<std::uint64_t>(i);
    out[i] = run_experiment(cfg);
  });
  return out;
}

std::vector<TomographyRun> tomography_seed_sweep(const ExperimentConfig& base,
                                                 std::uint64_t first_seed,
                                                 int count, ExecMode mode) {
  // TomographyRun is not default-constructible (it carries a state), so
  // stage the slots through optionals.
  std::vector<std::optional<TomographyRun>> staged(count);
  parallel_for_index(count, mode, [&](std::int64_t i) {
    ExperimentConfig cfg = base;
    cfg.seed = first_seed + static_cast<std::uint64_t>(i);
    staged[i] = reproduce_tomography_dataset(cfg);
  });
  std::vector<TomographyRun> out;
  out.reserve(count);
  for (auto& slot : staged) out.push_back(std::move(*slot));
  return out;
}

}  // namespace heraldgate
