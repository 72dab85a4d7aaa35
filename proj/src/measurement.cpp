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

#include "heraldgate/measurement.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace heraldgate {

namespace {

// Bright-state vector after the analysis rotation of one basis.
CVector bright_vector(Basis b) {
  CVector v(2);
  const double s = 1.0 / std::numbers::sqrt2;
  switch (b) {
    case Basis::X:
      v << s, s;
      break;
    case Basis::Y:
      v << s, Complex(0.0, -s);
      break;
    case Basis::Z:
      v << 0.0, 1.0;
      break;
  }
  return v;
}

ParityEstimate estimate_from_fraction(double value, std::int64_t n) {
  const double var = std::max(1.0 - value * value, 0.0);
  return ParityEstimate{value, std::sqrt(var / static_cast<double>(n)), n};
}

double checked_sum_to_one(std::array<double, 4>& p) {
  double s = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-12)
    throw std::logic_error("outcome_probabilities: probabilities do not sum to 1");
  return s;
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::X: return 'X';
    case Basis::Y: return 'Y';
    case Basis::Z: return 'Z';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'X': case 'x': return Basis::X;
    case 'Y': case 'y': return Basis::Y;
    case 'Z': case 'z': return Basis::Z;
  }
  throw std::invalid_argument(std::string("unknown basis letter '") + c + "'");
}

std::pair<Operator, Operator> analysis_projectors(Basis b) {
  const CVector v = bright_vector(b);
  CMatrix bright = v * v.adjoint();
  CMatrix dark = CMatrix::Identity(2, 2) - bright;
  return {Operator{std::move(bright)}, Operator{std::move(dark)}};
}

std::array<BasisPair, 9> all_basis_pairs() {
  std::array<BasisPair, 9> out;
  int k = 0;
  for (Basis a : {Basis::X, Basis::Y, Basis::Z})
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) out[k++] = BasisPair{a, b};
  return out;
}

const char* target_name(TargetClass t) {
  switch (t) {
    case TargetClass::PsiMinus: return "psi_minus";
    case TargetClass::PsiMinusI: return "psi_minus_i";
    case TargetClass::PsiPlus: return "psi_plus";
    case TargetClass::PsiPlusI: return "psi_plus_i";
    case TargetClass::ZeroOne: return "zero_one";
  }
  return "?";
}

PureState target_state(TargetClass t) {
  CVector v = CVector::Zero(4);
  const double s = 1.0 / std::numbers::sqrt2;
  switch (t) {
    case TargetClass::PsiMinus:
      v(1) = s;
      v(2) = -s;
      break;
    case TargetClass::PsiMinusI:
      v(1) = s;
      v(2) = Complex(0.0, -s);
      break;
    case TargetClass::PsiPlus:
      v(1) = s;
      v(2) = s;
      break;
    case TargetClass::PsiPlusI:
      v(1) = s;
      v(2) = Complex(0.0, s);
      break;
    case TargetClass::ZeroOne:
      v(1) = 1.0;
      break;
  }
  return PureState(std::move(v));
}

std::vector<BasisPair> required_bases(TargetClass t) {
  switch (t) {
    case TargetClass::PsiMinus:
    case TargetClass::PsiPlus:
      return {{Basis::X, Basis::X}, {Basis::Y, Basis::Y}, {Basis::Z, Basis::Z}};
    case TargetClass::PsiMinusI:
    case TargetClass::PsiPlusI:
      return {{Basis::X, Basis::Y}, {Basis::Y, Basis::X}, {Basis::Z, Basis::Z}};
    case TargetClass::ZeroOne:
      return {{Basis::Z, Basis::Z}};
  }
  return {};
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho,
                                            BasisPair basis, double eps_det) {
  if (rho.dim() != 4)
    throw std::invalid_argument("outcome_probabilities: expected a two-qubit state");
  if (!(eps_det >= 0.0 && eps_det <= 0.5))
    throw std::invalid_argument("outcome_probabilities: eps_det must be in [0, 1/2]");

  const auto [p1_bright, p1_dark] = analysis_projectors(basis.b1);
  const std::array<const Operator*, 2> p1 = {&p1_bright, &p1_dark};
  const auto [p2_bright, p2_dark] = analysis_projectors(basis.b2);
  const std::array<const Operator*, 2> p2 = {&p2_bright, &p2_dark};

  std::array<double, 4> ideal{};
  for (int o1 = 0; o1 < 2; ++o1)
    for (int o2 = 0; o2 < 2; ++o2) {
      const Operator proj = tensor(*p1[o1], *p2[o2]);
      ideal[o1 * 2 + o2] = (rho.entries() * proj.entries).trace().real();
    }

  std::array<double, 4> flipped{};
  const double keep = 1.0 - eps_det;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double acc = 0.0;
      for (int a0 = 0; a0 < 2; ++a0)
        for (int b0 = 0; b0 < 2; ++b0)
          acc += (a == a0 ? keep : eps_det) * (b == b0 ? keep : eps_det) *
                 ideal[a0 * 2 + b0];
      flipped[a * 2 + b] = acc;
    }
  checked_sum_to_one(flipped);
  return flipped;
}

ParityEstimate parity(const CountRecord& record) {
  const std::int64_t n = record.total();
  if (n <= 0) throw std::invalid_argument("parity: record has no events");
  const auto& c = record.counts;
  const double value =
      static_cast<double>(c[0] + c[3] - c[1] - c[2]) / static_cast<double>(n);
  return estimate_from_fraction(value, n);
}

BasisStats basis_statistics(const CountRecord& record) {
  const std::int64_t n = record.total();
  if (n <= 0) throw std::invalid_argument("basis_statistics: record has no events");
  const auto& c = record.counts;
  const double m1 =
      static_cast<double>(c[0] + c[1] - c[2] - c[3]) / static_cast<double>(n);
  const double m2 =
      static_cast<double>(c[0] + c[2] - c[1] - c[3]) / static_cast<double>(n);
  return BasisStats{parity(record), estimate_from_fraction(m1, n),
                    estimate_from_fraction(m2, n)};
}

BasisStats exact_basis_statistics(const DensityMatrix& rho, BasisPair basis) {
  const auto p = outcome_probabilities(rho, basis, 0.0);
  BasisStats out;
  out.parity = ParityEstimate{p[0] + p[3] - p[1] - p[2], 0.0, 0};
  out.marginal1 = ParityEstimate{p[0] + p[1] - p[2] - p[3], 0.0, 0};
  out.marginal2 = ParityEstimate{p[0] + p[2] - p[1] - p[3], 0.0, 0};
  return out;
}

FidelityEstimate fidelity_from_parities(
    TargetClass target, const std::map<BasisPair, BasisStats>& stats) {
  const auto lookup = [&](Basis a, Basis b) -> const BasisStats& {
    const auto it = stats.find(BasisPair{a, b});
    if (it == stats.end()) {
      std::ostringstream os;
      os << "fidelity_from_parities: missing basis " << basis_letter(a)
         << basis_letter(b) << " for target " << target_name(target);
      throw std::invalid_argument(os.str());
    }
    return it->second;
  };

  const auto bell = [&](double sa, const BasisStats& a, double sb,
                        const BasisStats& b, const BasisStats& zz) {
    const double value = 0.25 * (1.0 + sa * a.parity.value +
                                 sb * b.parity.value - zz.parity.value);
    const double se =
        0.25 * std::sqrt(a.parity.std_error * a.parity.std_error +
                         b.parity.std_error * b.parity.std_error +
                         zz.parity.std_error * zz.parity.std_error);
    return FidelityEstimate{value, se};
  };

  switch (target) {
    case TargetClass::PsiMinus:
      return bell(-1.0, lookup(Basis::X, Basis::X), -1.0,
                  lookup(Basis::Y, Basis::Y), lookup(Basis::Z, Basis::Z));
    case TargetClass::PsiPlus:
      return bell(+1.0, lookup(Basis::X, Basis::X), +1.0,
                  lookup(Basis::Y, Basis::Y), lookup(Basis::Z, Basis::Z));
    case TargetClass::PsiMinusI:
      return bell(-1.0, lookup(Basis::X, Basis::Y), +1.0,
                  lookup(Basis::Y, Basis::X), lookup(Basis::Z, Basis::Z));
    case TargetClass::PsiPlusI:
      return bell(+1.0, lookup(Basis::X, Basis::Y), -1.0,
                  lookup(Basis::Y, Basis::X), lookup(Basis::Z, Basis::Z));
    case TargetClass::ZeroOne: {
      const BasisStats& zz = lookup(Basis::Z, Basis::Z);
      // Algebraically the fraction of (dark, bright) events, so the error
      // is that of a single binomial proportion.
      const double value =
          0.25 * (1.0 - zz.marginal1.value + zz.marginal2.value -
                  zz.parity.value);
      double se = 0.0;
      if (zz.parity.n > 0) {
        se = std::sqrt(std::max(value * (1.0 - value), 0.0) /
                       static_cast<double>(zz.parity.n));
      }
      return FidelityEstimate{value, se};
    }
  }
  throw std::logic_error("fidelity_from_parities: unhandled target class");
}

std::vector<CountRecord> parse_count_records(std::istream& in) {
  std::vector<CountRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string b1, b2;
    if (!(ls >> b1)) continue;  // blank or comment-only line
    const auto fail = [&](const std::string& what) {
      std::ostringstream os;
      os << "count records: line " << line_no << ": " << what;
      throw std::runtime_error(os.str());
    };
    if (!(ls >> b2)) fail("expected two basis letters and four counts");
    if (b1.size() != 1 || b2.size() != 1) fail("basis must be a single letter");
    CountRecord rec;
    try {
      rec.basis = BasisPair{basis_from_letter(b1[0]), basis_from_letter(b2[0])};
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    for (int k = 0; k < 4; ++k) {
      std::int64_t v = 0;
      if (!(ls >> v)) fail("expected four outcome counts");
      if (v < 0) fail("counts must be non-negative");
      rec.counts[k] = v;
    }
    std::string extra;
    if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
    out.push_back(rec);
  }
  return out;
}

void write_count_records(std::ostream& out,
                         std::span<const CountRecord> records) {
  for (const CountRecord& r : records) {
    out << basis_letter(r.basis.b1) << ' ' << basis_letter(r.basis.b2);
    for (std::int64_t c : r.counts) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace heraldgate
