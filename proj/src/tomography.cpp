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

#include "heraldgate/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heraldgate {

namespace {

constexpr double kProbClamp = 1e-12;

// Strictly-lower-triangular parameter slots in row order.
constexpr std::array<std::pair<int, int>, 6> kLowerSlots = {
    std::pair{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};

CMatrix t_from_params(std::span<const double, kNumTParams> p) {
  CMatrix t = CMatrix::Zero(4, 4);
  for (int d = 0; d < 4; ++d) t(d, d) = p[d];
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kLowerSlots[k];
    t(i, j) = Complex(p[4 + 2 * k], p[5 + 2 * k]);
  }
  return t;
}

// Sign convention of the measured bright/dark operators relative to the
// standard Paulis: A_X = +sigma_x, A_Y = -sigma_y, A_Z = -sigma_z.
double measured_sign(Basis b) { return b == Basis::X ? 1.0 : -1.0; }

Operator standard_pauli(Basis b) {
  switch (b) {
    case Basis::X: return pauli(Pauli::X);
    case Basis::Y: return pauli(Pauli::Y);
    case Basis::Z: return pauli(Pauli::Z);
  }
  throw std::logic_error("standard_pauli: bad basis");
}

// Flip-mixed POVM elements of one basis pair, outcome order (++, +-, -+, --).
// Probabilities are then the linear functionals p_o = Tr(rho * B_o), which
// is what both the likelihood and its gradient need.
std::array<CMatrix, 4> flipped_povm(BasisPair basis, double eps_det) {
  const auto [b1p, b1m] = analysis_projectors(basis.b1);
  const auto [b2p, b2m] = analysis_projectors(basis.b2);

  const auto mix = [&](const CMatrix& hit, const CMatrix& miss) {
    return ((1.0 - eps_det) * hit + eps_det * miss).eval();
  };
  const CMatrix e1p = mix(b1p.entries, b1m.entries);
  const CMatrix e1m = mix(b1m.entries, b1p.entries);
  const CMatrix e2p = mix(b2p.entries, b2m.entries);
  const CMatrix e2m = mix(b2m.entries, b2p.entries);

  const auto kron = [](const CMatrix& a, const CMatrix& b) {
    return tensor(Operator{a}, Operator{b}).entries;
  };
  return {kron(e1p, e2p), kron(e1p, e2m), kron(e1m, e2p), kron(e1m, e2m)};
}

struct LikelihoodWorkspace {
  std::vector<std::array<CMatrix, 4>> povms;  // per record
  const TomographyInput* input = nullptr;

  LikelihoodWorkspace(const TomographyInput& in, double eps_det) : input(&in) {
    povms.reserve(in.records.size());
    for (const CountRecord& r : in.records)
      povms.push_back(flipped_povm(r.basis, eps_det));
  }

  double value(const CMatrix& rho) const {
    double nll = 0.0;
    for (std::size_t r = 0; r < povms.size(); ++r) {
      const auto& counts = input->records[r].counts;
      for (int o = 0; o < 4; ++o) {
        if (counts[o] == 0) continue;
        const double p =
            std::max((rho * povms[r][o]).trace().real(), kProbClamp);
        nll -= static_cast<double>(counts[o]) * std::log(p);
      }
    }
    return nll;
  }

  // dNLL/drho as a Hermitian matrix; clamped outcomes contribute nothing.
  CMatrix rho_gradient(const CMatrix& rho) const {
    CMatrix g = CMatrix::Zero(4, 4);
    for (std::size_t r = 0; r < povms.size(); ++r) {
      const auto& counts = input->records[r].counts;
      for (int o = 0; o < 4; ++o) {
        if (counts[o] == 0) continue;
        const double p = (rho * povms[r][o]).trace().real();
        if (p < kProbClamp) continue;
        g -= (static_cast<double>(counts[o]) / p) * povms[r][o];
      }
    }
    return g;
  }
};

TParams params_gradient(std::span<const double, kNumTParams> params,
                        const LikelihoodWorkspace& ws) {
  const CMatrix t = t_from_params(params);
  const CMatrix a = t.adjoint() * t;
  const double n = a.trace().real();
  if (n <= 0.0)
    throw std::invalid_argument("neg_log_likelihood: zero parameter vector");
  const CMatrix rho = a / n;
  const CMatrix g = ws.rho_gradient(rho);
  const double tr_g_rho = (g * rho).trace().real();
  const CMatrix h = (g - tr_g_rho * CMatrix::Identity(4, 4)) / n;
  const CMatrix d = 2.0 * t * h;

  TParams out{};
  for (int k = 0; k < 4; ++k) out[k] = d(k, k).real();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kLowerSlots[k];
    out[4 + 2 * k] = d(i, j).real();
    out[5 + 2 * k] = d(i, j).imag();
  }
  return out;
}

double vec_norm(const TParams& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double vec_dot(const TParams& a, const TParams& b) {
  double s = 0.0;
  for (int i = 0; i < kNumTParams; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void TomographyInput::validate() const {
  if (records.size() != 9)
    throw std::invalid_argument("TomographyInput: expected exactly 9 records");
  for (BasisPair bp : all_basis_pairs()) {
    const auto matches = std::count_if(
        records.begin(), records.end(),
        [&](const CountRecord& r) { return r.basis == bp; });
    if (matches != 1) {
      std::ostringstream os;
      os << "TomographyInput: basis " << basis_letter(bp.b1)
         << basis_letter(bp.b2) << " present " << matches
         << " times (expected once)";
      throw std::invalid_argument(os.str());
    }
  }
  if (total_events() < 16)
    throw std::invalid_argument("TomographyInput: need at least 16 events");
}

std::int64_t TomographyInput::total_events() const {
  return std::accumulate(records.begin(), records.end(), std::int64_t{0},
                         [](std::int64_t acc, const CountRecord& r) {
                           return acc + r.total();
                         });
}

CMatrix rho_from_tparams(std::span<const double, kNumTParams> params) {
  const CMatrix t = t_from_params(params);
  const CMatrix a = t.adjoint() * t;
  const double n = a.trace().real();
  if (n <= 0.0)
    throw std::invalid_argument("rho_from_tparams: zero parameter vector");
  return a / n;
}

TParams tparams_from_rho(const CMatrix& rho) {
  // rho = T^dag T with T lower-triangular is the Cholesky factorization in
  // the index-reversed basis: with P the reversal permutation and
  // P rho P = L L^dag, T = (P L P)^dag is lower-triangular.
  const int d = 4;
  CMatrix rev(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rev(i, j) = rho(d - 1 - i, d - 1 - j);
  Eigen::LLT<CMatrix> llt(rev);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("tparams_from_rho: matrix is not positive definite");
  const CMatrix l = llt.matrixL();
  CMatrix u(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) u(i, j) = l(d - 1 - i, d - 1 - j);
  const CMatrix t = u.adjoint();

  TParams out{};
  for (int k = 0; k < 4; ++k) out[k] = t(k, k).real();
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kLowerSlots[k];
    out[4 + 2 * k] = t(i, j).real();
    out[5 + 2 * k] = t(i, j).imag();
  }
  return out;
}

double neg_log_likelihood(std::span<const double, kNumTParams> params,
                          const TomographyInput& input, double eps_det) {
  input.validate();
  LikelihoodWorkspace ws(input, eps_det);
  return ws.value(rho_from_tparams(params));
}

TParams neg_log_likelihood_gradient(std::span<const double, kNumTParams> params,
                                    const TomographyInput& input,
                                    double eps_det) {
  input.validate();
  LikelihoodWorkspace ws(input, eps_det);
  return params_gradient(params, ws);
}

CMatrix linear_inversion_estimate(const TomographyInput& input,
                                  double eps_det) {
  // Pauli expectations from the measured correlators and marginals. The
  // bright/dark operators differ from the standard Paulis by the signs
  // measured_sign(); fold those back, and unfold the detection flips,
  // which damp correlators by (1-2e)^2 and marginals by (1-2e).
  const double damp1 = 1.0 - 2.0 * eps_det;
  const double damp2 = damp1 * damp1;

  double exp_two[3][3] = {};     // <sigma_a x sigma_b>
  double exp_one1[3] = {};       // <sigma_a x I>, averaged over records
  double exp_one2[3] = {};
  int seen1[3] = {}, seen2[3] = {};

  for (const CountRecord& r : input.records) {
    if (r.total() == 0) continue;  // no information from an empty record
    const BasisStats st = basis_statistics(r);
    const int i = static_cast<int>(r.basis.b1);
    const int j = static_cast<int>(r.basis.b2);
    const double si = measured_sign(r.basis.b1);
    const double sj = measured_sign(r.basis.b2);
    exp_two[i][j] = si * sj * st.parity.value / (damp2 > 0 ? damp2 : 1.0);
    exp_one1[i] += si * st.marginal1.value / (damp1 > 0 ? damp1 : 1.0);
    exp_one2[j] += sj * st.marginal2.value / (damp1 > 0 ? damp1 : 1.0);
    ++seen1[i];
    ++seen2[j];
  }
  for (int k = 0; k < 3; ++k) {
    if (seen1[k] > 0) exp_one1[k] /= seen1[k];
    if (seen2[k] > 0) exp_one2[k] /= seen2[k];
  }

  const std::array<Basis, 3> bases = {Basis::X, Basis::Y, Basis::Z};
  CMatrix rho = 0.25 * CMatrix::Identity(4, 4);
  const Operator id2 = Operator::identity(2);
  for (int i = 0; i < 3; ++i) {
    const Operator si = standard_pauli(bases[i]);
    rho += 0.25 * exp_one1[i] * tensor(si, id2).entries;
    rho += 0.25 * exp_one2[i] * tensor(id2, si).entries;
    for (int j = 0; j < 3; ++j)
      rho += 0.25 * exp_two[i][j] *
             tensor(si, standard_pauli(bases[j])).entries;
  }
  return rho;
}

ReconstructionResult reconstruct_mle(const TomographyInput& input,
                                     double eps_det,
                                     const OptimizerOptions& opts) {
  input.validate();
  if (!(eps_det >= 0.0 && eps_det <= 0.5))
    throw std::invalid_argument("reconstruct_mle: eps_det must be in [0, 1/2]");

  // Deterministic start: PSD-projected linear inversion.
  TParams x;
  {
    CMatrix guess = linear_inversion_estimate(input, eps_det);
    guess = (guess + guess.adjoint()).eval() / 2.0;
    if (!guess.allFinite()) guess = 0.25 * CMatrix::Identity(4, 4);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(guess);
    Eigen::VectorXd vals = es.eigenvalues().cwiseMax(1e-6);
    CMatrix psd = es.eigenvectors() * vals.asDiagonal() *
                  es.eigenvectors().adjoint();
    psd /= psd.trace().real();
    x = tparams_from_rho(psd);
  }

  LikelihoodWorkspace ws(input, eps_det);
  const auto f = [&](const TParams& p) {
    return ws.value(rho_from_tparams(std::span<const double, kNumTParams>(p)));
  };
  const auto grad = [&](const TParams& p) {
    return params_gradient(std::span<const double, kNumTParams>(p), ws);
  };

  // L-BFGS with two-loop recursion and Armijo backtracking.
  constexpr int kHistory = 8;
  std::vector<TParams> s_hist, y_hist;
  std::vector<double> rho_hist;

  double fx = f(x);
  TParams g = grad(x);
  bool converged = false;
  int iter = 0;

  for (; iter < opts.max_iterations; ++iter) {
    if (vec_norm(g) < opts.gradient_tolerance) {
      converged = true;
      break;
    }

    // Two-loop recursion for d = -H * g.
    TParams q = g;
    const int m = static_cast<int>(s_hist.size());
    std::vector<double> alpha(m);
    for (int k = m - 1; k >= 0; --k) {
      alpha[k] = rho_hist[k] * vec_dot(s_hist[k], q);
      for (int i = 0; i < kNumTParams; ++i) q[i] -= alpha[k] * y_hist[k][i];
    }
    if (m > 0) {
      const double yy = vec_dot(y_hist[m - 1], y_hist[m - 1]);
      const double sy = 1.0 / rho_hist[m - 1];
      const double scale = sy / std::max(yy, 1e-300);
      for (double& v : q) v *= scale;
    }
    for (int k = 0; k < m; ++k) {
      const double beta = rho_hist[k] * vec_dot(y_hist[k], q);
      for (int i = 0; i < kNumTParams; ++i)
        q[i] += (alpha[k] - beta) * s_hist[k][i];
    }
    TParams d;
    for (int i = 0; i < kNumTParams; ++i) d[i] = -q[i];
    double dg = vec_dot(d, g);
    if (dg >= 0.0) {  // not a descent direction; fall back to steepest descent
      for (int i = 0; i < kNumTParams; ++i) d[i] = -g[i];
      dg = -vec_dot(g, g);
    }

    // Backtracking line search (Armijo, c1 = 1e-4).
    double step = 1.0;
    double f_new = fx;
    TParams x_new = x;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (int i = 0; i < kNumTParams; ++i) x_new[i] = x[i] + step * d[i];
      f_new = f(x_new);
      if (std::isfinite(f_new) && f_new <= fx + 1e-4 * step * dg) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      converged = true;  // no measurable progress along the descent direction
      break;
    }

    const TParams g_new = grad(x_new);
    TParams s, y;
    for (int i = 0; i < kNumTParams; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    const double sy = vec_dot(s, y);
    if (sy > 1e-12 * vec_norm(s) * vec_norm(y)) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > kHistory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
    }

    const double decrease = fx - f_new;
    x = x_new;
    fx = f_new;
    g = g_new;
    if (decrease < opts.decrease_tolerance) {
      converged = true;
      ++iter;
      break;
    }
  }

  CMatrix rho = rho_from_tparams(std::span<const double, kNumTParams>(x));
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return ReconstructionResult{DensityMatrix(std::move(rho)), -fx, converged,
                              iter};
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("concurrence: expected a two-qubit state");
  const CMatrix yy = tensor(pauli(Pauli::Y), pauli(Pauli::Y)).entries;
  const CMatrix rho_tilde = yy * rho.entries().conjugate() * yy;
  const CMatrix r = rho.entries() * rho_tilde;
  Eigen::ComplexEigenSolver<CMatrix> es(r, /*computeEigenvectors=*/false);
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i)
    lambdas[i] = std::sqrt(std::max(es.eigenvalues()(i).real(), 0.0));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(1.0 - c * c, 0.0)));
  const auto h2 = [](double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  };
  return h2(x);
}

}  // namespace heraldgate
