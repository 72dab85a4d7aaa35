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

#include "heraldgate/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace heraldgate {

namespace {

constexpr double kProbFloor = 1e-14;

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string("ErrorModel: ") + name +
                                " must be in [0, 1]");
}

}  // namespace

void ErrorModel::validate() const {
  check_unit_interval(mode_overlap, "mode_overlap");
  check_unit_interval(eps_det, "eps_det");
  check_unit_interval(eps_sigma, "eps_sigma");
  check_unit_interval(p_false_herald, "p_false_herald");
}

DensityMatrix apply_sigma_leak(const DensityMatrix& rho, double eps_sigma) {
  check_unit_interval(eps_sigma, "eps_sigma");
  if (eps_sigma == 0.0) return rho;
  const double eps_eff = 1.0 - (1.0 - eps_sigma) * (1.0 - eps_sigma);
  const int d = rho.dim();
  CMatrix out = (1.0 - eps_eff) * rho.entries() +
                eps_eff / static_cast<double>(d) * CMatrix::Identity(d, d);
  return DensityMatrix(std::move(out));
}

DensityMatrix false_herald_state(const PureState& q1, const PureState& q2) {
  if (q1.dim() != 2 || q2.dim() != 2)
    throw std::invalid_argument("false_herald_state: expected qubits");
  CMatrix out = CMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i * 2 + j, i * 2 + j) =
          std::norm(q1.amplitude(i)) * std::norm(q2.amplitude(j));
  return DensityMatrix(std::move(out));
}

HeraldOutcome noisy_herald(const PureState& q1, const PureState& q2,
                           const ErrorModel& em) {
  em.validate();
  const HeraldOutcome base = herald_project(
      atom_photon_entangle(q1), atom_photon_entangle(q2), em.mode_overlap);
  if (em.eps_sigma == 0.0 && em.p_false_herald == 0.0) return base;

  const double p_cc = base.coincidence_probability;
  const double pf = em.p_false_herald;
  const double p_tot = p_cc * (1.0 - pf) + pf;
  if (p_tot < kProbFloor) return HeraldOutcome{p_tot, std::nullopt};

  CMatrix mix = CMatrix::Zero(4, 4);
  if (base.post_state.has_value()) {
    mix += (1.0 - pf) * p_cc *
           apply_sigma_leak(*base.post_state, em.eps_sigma).entries();
  }
  if (pf > 0.0) mix += pf * false_herald_state(q1, q2).entries();
  return HeraldOutcome{p_tot, DensityMatrix(CMatrix(mix / p_tot))};
}

}  // namespace heraldgate
