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

#include <array>
#include <span>

#include "heraldgate/measurement.hpp"

namespace heraldgate {

// Maximum-likelihood reconstruction of a physical two-qubit state from
// counts in the nine product bases.
//
// The state is parameterized as rho(t) = T^dag T / Tr(T^dag T) with T
// lower-triangular, which makes every iterate Hermitian, PSD and unit
// trace by construction. The 16 real parameters are the four diagonal
// entries (real) followed by (re, im) pairs of the strictly-lower entries
// in row order: (1,0), (2,0), (2,1), (3,0), (3,1), (3,2).

struct TomographyInput {
  std::vector<CountRecord> records;

  // Rejects inputs that do not contain each of the nine bases exactly
  // once, or that carry fewer than 16 total events.
  void validate() const;

  std::int64_t total_events() const;
};

struct OptimizerOptions {
  int max_iterations = 10000;
  double gradient_tolerance = 1e-6;
  double decrease_tolerance = 1e-10;
};

struct ReconstructionResult {
  DensityMatrix rho_hat;
  double log_likelihood = 0.0;
  bool converged = false;
  int iterations = 0;
};

inline constexpr int kNumTParams = 16;
using TParams = std::array<double, kNumTParams>;

// rho(t) as above. Rejects an all-zero parameter vector.
CMatrix rho_from_tparams(std::span<const double, kNumTParams> params);

// Inverse map for a positive-definite matrix (reverse Cholesky).
TParams tparams_from_rho(const CMatrix& rho);

// Multinomial negative log-likelihood
//   -sum_records sum_outcomes n_o * log p_o(rho(t)),
// with outcome probabilities including the detection-flip rate eps_det and
// clamped below at 1e-12.
double neg_log_likelihood(std::span<const double, kNumTParams> params,
                          const TomographyInput& input, double eps_det);

// Analytic gradient of neg_log_likelihood; agrees with central finite
// differences (verified in tests).
TParams neg_log_likelihood_gradient(std::span<const double, kNumTParams> params,
                                    const TomographyInput& input,
                                    double eps_det);

// L-BFGS minimization from a deterministic start: the linear-inversion
// estimate projected onto the PSD cone (eigenvalues clipped at 1e-6),
// falling back to I/4 if the inversion is degenerate. Converged means the
// gradient norm fell below gradient_tolerance or an iteration decreased
// the objective by less than decrease_tolerance; otherwise the best
// iterate is returned with converged = false.
ReconstructionResult reconstruct_mle(const TomographyInput& input,
                                     double eps_det,
                                     const OptimizerOptions& opts = {});

// Linear-inversion estimate before PSD projection (exposed for tests).
CMatrix linear_inversion_estimate(const TomographyInput& input,
                                  double eps_det);

// Wootters concurrence: with rho_tilde = (Y x Y) rho* (Y x Y) and l_i the
// descending square roots of the eigenvalues of rho * rho_tilde,
// C = max(0, l1 - l2 - l3 - l4).
double concurrence(const DensityMatrix& rho);

// Entanglement of formation h((1 + sqrt(1 - C^2))/2) with h the binary
// entropy in bits.
double entanglement_of_formation(const DensityMatrix& rho);

}  // namespace heraldgate
