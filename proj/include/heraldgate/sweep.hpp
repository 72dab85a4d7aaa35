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

#include "heraldgate/montecarlo.hpp"

namespace heraldgate {

// Multi-seed drivers for calibration studies. Seeds are first_seed,
// first_seed+1, ... and each run is independent, so the Parallel lane
// returns exactly the Serial lane's results.

std::vector<RunReport> run_seed_sweep(const ExperimentConfig& base,
                                      std::uint64_t first_seed, int count,
                                      ExecMode mode = ExecMode::Serial);

std::vector<TomographyRun> tomography_seed_sweep(const ExperimentConfig& base,
                                                 std::uint64_t first_seed,
                                                 int count,
                                                 ExecMode mode = ExecMode::Serial);

}  // namespace heraldgate
