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

#include "heraldgate/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace heraldgate {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string dim_mismatch(const char* what, int a, int b) {
  std::ostringstream os;
  os << what << ": dimension mismatch (" << a << " vs " << b << ")";
  return os.str();
}

}  // namespace

PureState::PureState(CVector amplitudes) : amp_(std::move(amplitudes)) {
  require(amp_.size() >= 1, "PureState: empty amplitude vector");
  const double norm = amp_.norm();
  require(norm > 1e-15, "PureState: cannot normalize a zero vector");
  amp_ /= norm;
}

PureState PureState::basis_state(int dim, int index) {
  require(dim >= 1, "PureState: dim must be positive");
  require(index >= 0 && index < dim, "PureState: basis index out of range");
  CVector v = CVector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
  require(m_.rows() >= 1 && m_.rows() == m_.cols(),
          "DensityMatrix: entries must be square and non-empty");
  const double herm_err = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermitianTol) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (max asymmetry " << herm_err << ")";
    throw std::invalid_argument(os.str());
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " is not 1";
    throw std::invalid_argument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kEigenvalueFloor) {
    std::ostringstream os;
    os << "DensityMatrix: not positive semidefinite (min eigenvalue "
       << min_eig << ")";
    throw std::invalid_argument(os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  require(dim >= 1, "DensityMatrix: dim must be positive");
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

Operator pauli(Pauli which) {
  CMatrix m(2, 2);
  switch (which) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return Operator{std::move(m)};
}

Operator tensor(const Operator& a, const Operator& b) {
  return Operator{Eigen::kroneckerProduct(a.entries, b.entries).eval()};
}

PureState tensor(const PureState& a, const PureState& b) {
  CVector out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      out(i * b.dim() + j) = a.amplitude(i) * b.amplitude(j);
  return PureState(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(
      Eigen::kroneckerProduct(a.entries(), b.entries()).eval());
}

CMatrix partial_trace_raw(const CMatrix& m, std::span<const int> keep,
                          std::span<const int> dims) {
  require(m.rows() == m.cols(), "partial_trace: matrix must be square");
  long total = 1;
  for (int d : dims) {
    require(d >= 1, "partial_trace: factor dimensions must be positive");
    total *= d;
  }
  if (total != m.rows()) {
    throw std::invalid_argument(
        dim_mismatch("partial_trace: product of factor dims vs matrix dim",
                     static_cast<int>(total), static_cast<int>(m.rows())));
  }
  const int n = static_cast<int>(dims.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    require(keep[k] >= 0 && keep[k] < n, "partial_trace: keep index out of range");
    if (k > 0) require(keep[k] > keep[k - 1], "partial_trace: keep indices must be strictly ascending");
  }

  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;

  long keep_dim = 1, trace_dim = 1;
  for (int f = 0; f < n; ++f) (kept[f] ? keep_dim : trace_dim) *= dims[f];

  // Strides of each factor in the flat index (slow factor first).
  std::vector<long> stride(n, 1);
  for (int f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  auto flat_index = [&](long kept_idx, long traced_idx) {
    long idx = 0;
    long k = kept_idx, t = traced_idx;
    // Decompose in factor order so the kept factors keep their relative
    // ordering (slow index first) in the output space.
    std::vector<long> digits(n);
    for (int f = n - 1; f >= 0; --f) {
      if (kept[f]) {
        digits[f] = k % dims[f];
        k /= dims[f];
      } else {
        digits[f] = t % dims[f];
        t /= dims[f];
      }
    }
    for (int f = 0; f < n; ++f) idx += digits[f] * stride[f];
    return idx;
  };

  CMatrix out = CMatrix::Zero(keep_dim, keep_dim);
  for (long i = 0; i < keep_dim; ++i) {
    for (long j = 0; j < keep_dim; ++j) {
      Complex acc(0.0, 0.0);
      for (long t = 0; t < trace_dim; ++t)
        acc += m(flat_index(i, t), flat_index(j, t));
      out(i, j) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep,
                            std::span<const int> dims) {
  return DensityMatrix(partial_trace_raw(rho.entries(), keep, dims));
}

double fidelity_pure(const DensityMatrix& rho, const PureState& target) {
  if (rho.dim() != target.dim()) {
    throw std::invalid_argument(
        dim_mismatch("fidelity_pure", rho.dim(), target.dim()));
  }
  const Complex val = target.amplitudes().adjoint() * rho.entries() *
                      target.amplitudes();
  if (std::abs(val.imag()) > 1e-10) {
    std::ostringstream os;
    os << "fidelity_pure: non-real overlap (imag " << val.imag() << ")";
    throw std::invalid_argument(os.str());
  }
  return std::clamp(val.real(), 0.0, 1.0);
}

double expectation(const DensityMatrix& rho, const Operator& op) {
  if (rho.dim() != op.dim()) {
    throw std::invalid_argument(dim_mismatch("expectation", rho.dim(), op.dim()));
  }
  const double herm_err = (op.entries - op.entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > kHermitianTol) {
    std::ostringstream os;
    os << "expectation: operator is not Hermitian (max asymmetry " << herm_err
       << ")";
    throw std::invalid_argument(os.str());
  }
  return (rho.entries() * op.entries).trace().real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(dim_mismatch("trace_distance", a.dim(), b.dim()));
  }
  CMatrix diff = a.entries() - b.entries();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace heraldgate
