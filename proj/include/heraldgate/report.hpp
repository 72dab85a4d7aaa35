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

#include <string>

#include "heraldgate/montecarlo.hpp"

namespace heraldgate {

enum class ReportFormat { Json, Csv };

// Serialized reports have stable field ordering and floats rounded to six
// significant digits, so identical runs emit identical bytes.

// JSON: seed, config echo, herald statistics, per-basis records, derived
// fidelities. CSV: one header plus one row per basis record.
std::string emit_report(const RunReport& report, ReportFormat format);

// Side-by-side table of simulated vs published row values.
std::string emit_table1_text(const Table1Result& result);
std::string emit_table1_csv(const Table1Result& result);

// Reconstructed state as {re, im} matrices plus the derived scalars.
std::string emit_reconstruction_json(const TomographyRun& run);

// Bar-chart data of the reconstructed matrix: row,col,re,im per entry.
std::string emit_reconstruction_plot_csv(const TomographyRun& run);

// Rate-budget breakdown for the `rates` subcommand.
std::string emit_rates_text(const RateBudget& budget);

}  // namespace heraldgate
