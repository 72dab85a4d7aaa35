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

#include "heraldgate/rates.hpp"

#include <stdexcept>
#include <string>

namespace heraldgate {

namespace {

void check_efficiency(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string("RateBudget: ") + name +
                                " must be in [0, 1]");
}

}  // namespace

void RateBudget::validate() const {
  check_efficiency(p_pi, "p_pi");
  check_efficiency(solid_angle_fraction, "solid_angle_fraction");
  check_efficiency(t_fiber, "t_fiber");
  check_efficiency(t_optics, "t_optics");
  check_efficiency(eta, "eta");
  if (!(attempt_rate_hz >= 0.0))
    throw std::invalid_argument("RateBudget: attempt_rate_hz must be >= 0");
}

double per_photon_detection_prob(const RateBudget& b) {
  b.validate();
  return b.p_pi * b.solid_angle_fraction * b.t_fiber * b.t_optics * b.eta;
}

double gate_success_probability(const RateBudget& b, double p_psi) {
  if (!(p_psi >= 0.0 && p_psi <= 0.5))
    throw std::invalid_argument("gate_success_probability: p_psi must be in [0, 1/2]");
  const double p = per_photon_detection_prob(b);
  return p_psi * p * p;
}

double expected_events(const RateBudget& b, double p_psi, double duration_s) {
  if (!(duration_s >= 0.0))
    throw std::invalid_argument("expected_events: duration must be >= 0");
  return b.attempt_rate_hz * duration_s * gate_success_probability(b, p_psi);
}

}  // namespace heraldgate
