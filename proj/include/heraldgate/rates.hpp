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

namespace heraldgate {

// Photon collection and detection budget of one heralding attempt. The
// defaults are the reference free-space apparatus values.
struct RateBudget {
  double p_pi = 0.5;                  // collected photon is pi-polarized
  double solid_angle_fraction = 0.02; // collection solid angle / 4*pi
  double t_fiber = 0.2;               // single-mode fiber coupling+transmission
  double t_optics = 0.95;             // remaining optics transmission
  double eta = 0.15;                  // detector quantum efficiency
  double attempt_rate_hz = 0.0;       // 0 = unknown

  void validate() const;
};

// Probability that one emitted photon reaches a detector and fires it:
// p_pi * (solid angle fraction) * t_fiber * t_optics * eta.
double per_photon_detection_prob(const RateBudget& b);

// Success probability of one gate attempt: both photons must be detected,
// so p_psi * (per-photon probability)^2. p_psi must lie in [0, 1/2].
double gate_success_probability(const RateBudget& b, double p_psi);

// attempt_rate_hz * duration_s * gate_success_probability; 0 when the
// attempt rate is unknown.
double expected_events(const RateBudget& b, double p_psi, double duration_s);

}  // namespace heraldgate
