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

#include "heraldgate/protocol.hpp"

namespace heraldgate {

// Quantified imperfections of the heralding experiment. All parameters are
// probabilities in [0, 1].
//
//   mode_overlap    squared wavepacket overlap M of the two photons at the
//                   beamsplitter (mode mismatch and residual micromotion
//                   both reduce it)
//   eps_det         per-ion probability that state detection reports the
//                   wrong outcome
//   eps_sigma       per-photon probability that a sigma-polarized photon
//                   leaks through the polarizer
//   p_false_herald  probability that a herald is a dark-count false
//                   coincidence rather than two signal photons; defined
//                   conditionally, i.e. relative to one heralding attempt,
//                   not derived from dark-count rates
struct ErrorModel {
  double mode_overlap = 1.0;
  double eps_det = 0.0;
  double eps_sigma = 0.0;
  double p_false_herald = 0.0;

  void validate() const;

  bool is_ideal() const {
    return mode_overlap == 1.0 && eps_det == 0.0 && eps_sigma == 0.0 &&
           p_false_herald == 0.0;
  }
};

// Two-qubit depolarization from sigma-polarized light: either photon leaks
// with probability eps_sigma, so the effective white-noise weight is
// 1 - (1 - eps_sigma)^2. Leaves the input untouched when eps_sigma == 0.
DensityMatrix apply_sigma_leak(const DensityMatrix& rho, double eps_sigma);

// Two-ion state conditioned on a false coincidence: no photon was actually
// projected, so each ion is dephased by its undetected emitted photon,
// giving diag(|a1|^2, |b1|^2) (x) diag(|a2|^2, |b2|^2).
DensityMatrix false_herald_state(const PureState& q1, const PureState& q2);

// Heralding with the full error model applied:
//   p_tot = p_cc(M) * (1 - p_false) + p_false
//   post  = [(1 - p_false) * p_cc * sigma_leak(rho_cc) +
//            p_false * false_herald_state] / p_tot
// Detection flips are not applied here; they act at measurement time.
HeraldOutcome noisy_herald(const PureState& q1, const PureState& q2,
                           const ErrorModel& em);

}  // namespace heraldgate
