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
#include <functional>

namespace heraldgate {

// Execution lane for embarrassingly parallel drivers (seed sweeps, row
// fan-outs, per-seed reconstructions). Serial is the reference
// implementation; Parallel runs the same bodies under OpenMP. Both must
// produce identical results because every body owns its index's state.
enum class ExecMode { Serial, Parallel };

// Runs body(0..n-1). In Parallel mode iterations are distributed over
// OpenMP threads (dynamic schedule); exceptions thrown by bodies are
// captured and the first one is rethrown after the loop completes.
void parallel_for_index(std::int64_t n, ExecMode mode,
                        const std::function<void(std::int64_t)>& body);

// Number of threads the Parallel lane would use (1 without OpenMP).
int parallel_thread_count();

}  // namespace heraldgate
