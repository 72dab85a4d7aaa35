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
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "heraldgate/qcore.hpp"

namespace heraldgate {

// Basis-rotated fluorescence measurement of the two ions.
//
// Outcome labels: '+' means bright, i.e. the ion is found in |1> after the
// analysis rotation; '-' means dark (|0>). The rotation conventions are:
//
//   Z   no pulse; |1> is bright.
//   X   pi/2 analysis pulse with phase 0, mapping (|0>+|1>)/sqrt(2) to
//       bright.
//   Y   pi/2 analysis pulse with phase pi/2, mapping (|0>-i|1>)/sqrt(2) to
//       bright.
//
// The bright/dark difference therefore measures sigma_x in X, -sigma_y in
// Y and -sigma_z in Z. Any self-consistent phase convention works; this
// one makes the documented parity formulas below exact projector
// expansions of their target states.

enum class Basis : std::uint8_t { X, Y, Z };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

struct BasisPair {
  Basis b1 = Basis::Z;
  Basis b2 = Basis::Z;

  auto operator<=>(const BasisPair&) const = default;
};

// All nine basis pairs in lexicographic order (XX, XY, ..., ZZ).
std::array<BasisPair, 9> all_basis_pairs();

// Outcome counts for one analysis basis, ordered (++, +-, -+, --) with '+'
// bright as above and ion 1 listed first.
struct CountRecord {
  BasisPair basis;
  std::array<std::int64_t, 4> counts{0, 0, 0, 0};

  std::int64_t total() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
};

struct ParityEstimate {
  double value = 0.0;      // in [-1, 1]
  double std_error = 0.0;  // binomial, sqrt((1 - value^2)/n)
  std::int64_t n = 0;
};

// Correlator and single-ion brightness asymmetries of one record. The
// marginals are needed for the separable-target fidelity estimator.
struct BasisStats {
  ParityEstimate parity;     // same-outcome minus opposite-outcome fraction
  ParityEstimate marginal1;  // bright-minus-dark fraction of ion 1
  ParityEstimate marginal2;  // bright-minus-dark fraction of ion 2
};

// The distinct expected output states of the gate for which a parity-based
// fidelity formula is defined. ZeroOne covers every separable |0>|1> row.
enum class TargetClass {
  PsiMinus,    // (|01> - |10>)/sqrt(2)
  PsiMinusI,   // (|01> - i|10>)/sqrt(2)
  PsiPlus,     // (|01> + |10>)/sqrt(2)
  PsiPlusI,    // (|01> + i|10>)/sqrt(2)
  ZeroOne,     // |01>
};

inline constexpr std::array<TargetClass, 5> kAllTargetClasses = {
    TargetClass::PsiMinus, TargetClass::PsiMinusI, TargetClass::PsiPlus,
    TargetClass::PsiPlusI, TargetClass::ZeroOne};

const char* target_name(TargetClass t);
PureState target_state(TargetClass t);
std::vector<BasisPair> required_bases(TargetClass t);

// Bright and dark projectors of one ion's analysis basis (the convention
// block above is normative; this is its single definition point).
std::pair<Operator, Operator> analysis_projectors(Basis b);

// Probabilities of the four outcomes (++, +-, -+, --) when `rho` is
// measured in `basis`, with each ion's outcome flipped independently with
// probability eps_det in [0, 1/2]. The four values sum to 1.
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho,
                                            BasisPair basis, double eps_det);

// Parity of a count record: [n(++) + n(--) - n(+-) - n(-+)] / N. Rejects
// an empty record.
ParityEstimate parity(const CountRecord& record);

// Parity plus both single-ion marginals of a record.
BasisStats basis_statistics(const CountRecord& record);

// Infinite-statistics limit of basis_statistics: exact expectations of the
// measured operators, zero standard errors, n = 0.
BasisStats exact_basis_statistics(const DensityMatrix& rho, BasisPair basis);

struct FidelityEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Evaluates the parity formula of a target class:
//
//   PsiMinus    (1 - P_xx - P_yy - P_zz) / 4
//   PsiMinusI   (1 - P_xy + P_yx - P_zz) / 4
//   PsiPlus     (1 + P_xx + P_yy - P_zz) / 4
//   PsiPlusI    (1 + P_xy - P_yx - P_zz) / 4
//   ZeroOne     (1 - m1_zz + m2_zz - P_zz) / 4   (= dark-bright fraction)
//
// On exact statistics each formula equals fidelity_pure against the target
// for every two-qubit state. Bell-class errors combine the three parity
// errors in quadrature; ZeroOne is a single binomial proportion. Throws if
// a required basis is missing from the map.
FidelityEstimate fidelity_from_parities(
    TargetClass target, const std::map<BasisPair, BasisStats>& stats);

// Text form: one record per line, `<b1> <b2> <n_pp> <n_pm> <n_mp> <n_mm>`,
// bases as letters X/Y/Z; blank lines and `#` comments are skipped.
// Parse errors carry the line number.
std::vector<CountRecord> parse_count_records(std::istream& in);
void write_count_records(std::ostream& out,
                         std::span<const CountRecord> records);

}  // namespace heraldgate
