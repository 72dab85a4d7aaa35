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

#include "heraldgate/protocol.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heraldgate {

namespace {

constexpr double kPi = std::numbers::pi;

// Herald probabilities below this are treated as "never fires".
constexpr double kProbFloor = 1e-14;

void check_qubit(const PureState& q, const char* what) {
  if (q.dim() != 2) throw std::invalid_argument(std::string(what) + ": expected a qubit (dim 2)");
}

// Reorders a 16-dim amplitude vector from (atom1, photon1, atom2, photon2)
// to (atom1, atom2, photon1, photon2), slow index first.
CVector reorder_atoms_photons(const CVector& v) {
  CVector out(16);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int p1 = 0; p1 < 2; ++p1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int p2 = 0; p2 < 2; ++p2)
          out(a1 * 8 + a2 * 4 + p1 * 2 + p2) = v(a1 * 8 + p1 * 4 + a2 * 2 + p2);
  return out;
}

}  // namespace

PureState prepare_qubit(const PrepSetting& p) {
  if (!(p.theta >= 0.0 && p.theta <= kPi))
    throw std::invalid_argument("prepare_qubit: theta must be in [0, pi]");
  if (!(p.phi >= 0.0 && p.phi < 2.0 * kPi))
    throw std::invalid_argument("prepare_qubit: phi must be in [0, 2*pi)");
  CVector v(2);
  v(0) = std::cos(p.theta / 2.0);
  v(1) = std::polar(std::sin(p.theta / 2.0), p.phi);
  return PureState(std::move(v));
}

AtomPhotonState atom_photon_entangle(const PureState& qubit) {
  check_qubit(qubit, "atom_photon_entangle");
  CVector v = CVector::Zero(4);
  v(0) = qubit.amplitude(0);  // |0>|b>
  v(3) = qubit.amplitude(1);  // |1>|r>
  return AtomPhotonState{PureState(std::move(v))};
}

double p_psi_minus(const PureState& q1, const PureState& q2) {
  check_qubit(q1, "p_psi_minus");
  check_qubit(q2, "p_psi_minus");
  const double a1 = std::norm(q1.amplitude(0)), b1 = std::norm(q1.amplitude(1));
  const double a2 = std::norm(q2.amplitude(0)), b2 = std::norm(q2.amplitude(1));
  return 0.5 * (a1 * b2 + b1 * a2);
}

GateOutput gate_kraus_apply(const PureState& q1, const PureState& q2) {
  check_qubit(q1, "gate_kraus_apply");
  check_qubit(q2, "gate_kraus_apply");
  // Z1(I - Z1 Z2)/2 = |01><01| - |10><10|.
  CVector v = CVector::Zero(4);
  v(1) = q1.amplitude(0) * q2.amplitude(1);
  v(2) = -q1.amplitude(1) * q2.amplitude(0);
  const double norm_sq = v.squaredNorm();
  if (norm_sq < kProbFloor) return GateOutput{std::nullopt, norm_sq};
  return GateOutput{PureState(std::move(v)), norm_sq};
}

PureState photon_psi_minus() {
  CVector v = CVector::Zero(4);
  v(1) = 1.0 / std::numbers::sqrt2;   // |br>
  v(2) = -1.0 / std::numbers::sqrt2;  // |rb>
  return PureState(std::move(v));
}

Operator coincidence_povm(double mode_overlap) {
  if (!(mode_overlap >= 0.0 && mode_overlap <= 1.0))
    throw std::invalid_argument("coincidence_povm: mode overlap must be in [0, 1]");
  const CVector psi = photon_psi_minus().amplitudes();
  CMatrix e = mode_overlap * (psi * psi.adjoint()) +
              (1.0 - mode_overlap) * 0.5 * CMatrix::Identity(4, 4);
  return Operator{std::move(e)};
}

HeraldOutcome herald_project(const AtomPhotonState& s1,
                             const AtomPhotonState& s2, double mode_overlap) {
  const PureState joint = tensor(s1.state, s2.state);
  const CVector v = reorder_atoms_photons(joint.amplitudes());
  const CMatrix rho_joint = v * v.adjoint();

  const Operator e_cc = coincidence_povm(mode_overlap);
  const CMatrix weighted =
      tensor(Operator::identity(4), e_cc).entries * rho_joint;

  constexpr std::array<int, 1> keep = {0};
  constexpr std::array<int, 2> dims = {4, 4};
  CMatrix unnorm = partial_trace_raw(weighted, keep, dims);

  const double prob = std::max(unnorm.trace().real(), 0.0);
  if (prob < kProbFloor) return HeraldOutcome{prob, std::nullopt};

  // The contraction equals Tr_p[(I x sqrt(E)) rho (I x sqrt(E))], so the
  // result is Hermitian PSD up to rounding; symmetrize before validating.
  CMatrix post = (unnorm + unnorm.adjoint()) / (2.0 * prob);
  return HeraldOutcome{prob, DensityMatrix(std::move(post))};
}

}  // namespace heraldgate
