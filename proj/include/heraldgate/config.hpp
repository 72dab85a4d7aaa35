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

#include <stdexcept>
#include <string>
#include <string_view>

#include "heraldgate/montecarlo.hpp"

namespace heraldgate {

// Flat INI-style configuration with sections [prep], [errors], [budget]
// and [run]. Keys mirror the config structs one-to-one:
//
//   [prep]    theta1 phi1 theta2 phi2           (radians)
//   [errors]  mode_overlap eps_det eps_sigma p_false_herald
//   [budget]  p_pi solid_angle_fraction t_fiber t_optics eta attempt_rate_hz
//   [run]     seed fast_mode basis_schedule attempt_cap tomo_events
//             tomo_calibrated
//
// basis_schedule is a comma-separated list of <pair>:<events> entries,
// e.g. `XX:70, YY:70, ZZ:70`. Unknown keys and out-of-range values are
// rejected with the offending key and line number. An empty document
// yields the defaults: ideal error model, the reference rate budget,
// seed 0, fast_mode on, the |0+1> x |0+1> preparation with the
// XX/YY/ZZ 70-event schedule.

struct ConfigError : std::runtime_error {
  ConfigError(int line_number, std::string key_name, const std::string& what)
      : std::runtime_error("config: line " + std::to_string(line_number) +
                           ": key '" + key_name + "': " + what),
        line(line_number),
        key(std::move(key_name)) {}
  int line;
  std::string key;
};

ExperimentConfig parse_config(std::string_view text);

// Canonical serialization; parse(serialize(cfg)) == cfg for every valid
// config (parse -> serialize -> parse is a fixed point).
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace heraldgate
