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

#include <optional>

#include "heraldgate/qcore.hpp"

namespace heraldgate {

// Ideal gate algebra for the photon-heralded two-ion entangling gate.
//
// Each ion is prepared in alpha|0> + beta|1>, emits one photon whose
// frequency (blue/red) is entangled with the qubit, and the two photons
// interfere on a 50/50 beamsplitter. A two-detector coincidence projects
// the photon pair onto the antisymmetric state and thereby applies the
// (non-unitary) gate Z1(I - Z1 Z2)/2 to the ion pair.

// Single-qubit preparation pulse: theta in [0, pi], phi in [0, 2*pi).
struct PrepSetting {
  double theta = 0.0;
  double phi = 0.0;
};

// Joint (qubit x photon-frequency) state of one ion after emission, on the
// basis {|0>|b>, |0>|r>, |1>|b>, |1>|r>}. Ideal emission never populates
// the cross terms |0>|r> and |1>|b>.
struct AtomPhotonState {
  PureState state;
};

// Result of a heralding attempt. `post_state` is the two-ion state
// (basis {|00>, |01>, |10>, |11>}) conditioned on the coincidence and is
// absent when the coincidence probability vanishes.
struct HeraldOutcome {
  double coincidence_probability = 0.0;
  std::optional<DensityMatrix> post_state;
};

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, with the |0> amplitude
// real and non-negative. Rejects out-of-range angles.
PureState prepare_qubit(const PrepSetting& p);

// alpha|0>|b> + beta|1>|r>, amplitudes copied from the qubit state.
AtomPhotonState atom_photon_entangle(const PureState& qubit);

// Probability for the two emitted photons to be found in the antisymmetric
// state: (|a1 b2|^2 + |b1 a2|^2) / 2. Always in [0, 1/2].
double p_psi_minus(const PureState& q1, const PureState& q2);

struct GateOutput {
  // Absent when the gate annihilates the input (|00> or |11>).
  std::optional<PureState> state;
  double norm_sq = 0.0;  // equals 2 * p_psi_minus
};

// Closed-form action of the herald Kraus operator Z1(I - Z1 Z2)/2 on
// q1 (x) q2.
GateOutput gate_kraus_apply(const PureState& q1, const PureState& q2);

// Coincidence POVM element on the two-photon frequency space
// {|bb>, |br>, |rb>, |rr>}:
//   E_cc = M |psi-><psi-| + (1 - M) I/2,
// where M in [0, 1] is the squared wavepacket overlap of the two photons.
// M = 1 recovers the ideal two-photon interference rule (coincidences only
// for the antisymmetric state); M = 0 is the distinguishable-photon floor
// where half of all pairs coincide.
Operator coincidence_povm(double mode_overlap);

// Full 16-dimensional heralding pipeline: forms |s1 (x) s2>, reorders to
// atoms (x) photons, applies I (x) E_cc(M), and traces out the photons.
// With M = 1 this agrees exactly with gate_kraus_apply.
HeraldOutcome herald_project(const AtomPhotonState& s1,
                             const AtomPhotonState& s2, double mode_overlap);

// Two-photon antisymmetric state (|br> - |rb>)/sqrt(2) on the photon-pair
// basis used by coincidence_povm.
PureState photon_psi_minus();

}  // namespace heraldgate
