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

#include <cmath>
#include <numbers>

#include "heraldgate/qcore.hpp"
#include "heraldgate/rng.hpp"

namespace heraldgate::testing {

inline double gaussian(Rng& rng) {
  // Box-Muller; u clamped away from 0.
  const double u = std::max(rng.uniform(), 1e-300);
  const double v = rng.uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

inline CMatrix random_ginibre(Rng& rng, int dim) {
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gaussian(rng), gaussian(rng));
  return g;
}

// Ginibre-induced random density matrix (full rank almost surely).
inline DensityMatrix random_density_matrix(Rng& rng, int dim) {
  const CMatrix g = random_ginibre(rng, dim);
  CMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

inline PureState random_pure_state(Rng& rng, int dim) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gaussian(rng), gaussian(rng));
  return PureState(std::move(v));
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace heraldgate::testing
