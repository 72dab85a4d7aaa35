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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace heraldgate {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Numerical tolerances for the state invariants. The PSD floor is looser
// than the Hermitian/trace tolerances because eigensolvers on states that
// are positive by construction still report eigenvalues slightly below 0.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

// Normalized complex state vector. Basis ordering is fixed globally: the
// qubit basis is {|0>, |1>}; composite spaces order the left tensor factor
// as the slow index, so the two-qubit basis is {|00>, |01>, |10>, |11>}
// with ion 1 on the left.
class PureState {
 public:
  // Normalizes the amplitudes; rejects a (near-)zero vector.
  explicit PureState(CVector amplitudes);

  static PureState basis_state(int dim, int index);

  int dim() const { return static_cast<int>(amp_.size()); }
  const CVector& amplitudes() const { return amp_; }
  Complex amplitude(int i) const { return amp_(i); }

 private:
  CVector amp_;
};

// Hermitian, unit-trace, positive-semidefinite matrix (within tolerances).
// Construction validates all three invariants and rejects violations.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& entries() const { return m_; }

 private:
  CMatrix m_;
};

// Square matrix with no constraints beyond shape; gate Kraus operators and
// POVM elements are generally non-Hermitian or non-unital.
struct Operator {
  CMatrix entries;

  int dim() const { return static_cast<int>(entries.rows()); }

  static Operator identity(int dim) {
    return Operator{CMatrix::Identity(dim, dim)};
  }
};

enum class Pauli { I, X, Y, Z };

// Standard 2x2 Pauli matrices, Y = [[0, -i], [i, 0]].
Operator pauli(Pauli which);

// Kronecker products; the left factor is the slow index.
Operator tensor(const Operator& a, const Operator& b);
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Partial trace over the factors not listed in `keep`. `dims` lists every
// factor dimension, slow index first; their product must equal the matrix
// dimension. `keep` must be strictly ascending.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep,
                            std::span<const int> dims);

// Same contraction on a raw matrix, without density-matrix validation.
// Needed mid-pipeline where the operand is a POVM-weighted product that
// only becomes a state after normalization.
CMatrix partial_trace_raw(const CMatrix& m, std::span<const int> keep,
                          std::span<const int> dims);

// <target| rho |target>. The imaginary part must vanish (|Im| < 1e-10);
// the real part is clamped into [0, 1], whose violation is bounded by the
// PSD tolerance for any valid DensityMatrix.
double fidelity_pure(const DensityMatrix& rho, const PureState& target);

// Tr(rho * op) for Hermitian `op`; rejects a non-Hermitian operator.
double expectation(const DensityMatrix& rho, const Operator& op);

// Half the trace norm of the difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace heraldgate
