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

#include <sstream>

#include <doctest.h>

#include "heraldgate/measurement.hpp"
#include "test_util.hpp"

using namespace heraldgate;
using heraldgate::testing::random_density_matrix;

namespace {

DensityMatrix singlet_rho() {
  return DensityMatrix::from_pure(target_state(TargetClass::PsiMinus));
}

// Measured bright/dark operator of one analysis basis, relative to the
// standard Paulis: X, -Y, -Z.
Operator measured_operator(Basis b) {
  switch (b) {
    case Basis::X: return pauli(Pauli::X);
    case Basis::Y: return Operator{CMatrix(-pauli(Pauli::Y).entries)};
    case Basis::Z: return Operator{CMatrix(-pauli(Pauli::Z).entries)};
  }
  throw std::logic_error("bad basis");
}

}  // namespace

TEST_CASE("outcome probabilities of the singlet") {
  const DensityMatrix rho = singlet_rho();

  const auto zz = outcome_probabilities(rho, {Basis::Z, Basis::Z}, 0.0);
  CHECK(zz[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(zz[1] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(zz[2] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(zz[3] == doctest::Approx(0.0).epsilon(1e-13));

  // Anticorrelated in every basis.
  const auto xx = outcome_probabilities(rho, {Basis::X, Basis::X}, 0.0);
  CHECK(xx[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(xx[1] == doctest::Approx(0.5).epsilon(1e-13));

  // Detection flips: p(+,+) = 0.5 * 0.97 * 0.03 + 0.5 * 0.03 * 0.97.
  const auto flipped = outcome_probabilities(rho, {Basis::Z, Basis::Z}, 0.03);
  CHECK(flipped[0] == doctest::Approx(0.0291).epsilon(1e-12));
  CHECK(flipped[3] == doctest::Approx(0.0291).epsilon(1e-12));
  CHECK(flipped[1] == doctest::Approx(0.4709).epsilon(1e-12));
  CHECK(flipped[2] == doctest::Approx(0.4709).epsilon(1e-12));

  CHECK_THROWS_AS(outcome_probabilities(rho, {Basis::Z, Basis::Z}, 0.6),
                  std::invalid_argument);
}

TEST_CASE("maximal detection noise flattens every state") {
  Rng rng(59);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = random_density_matrix(rng, 4);
    for (BasisPair bp : all_basis_pairs()) {
      const auto p = outcome_probabilities(rho, bp, 0.5);
      for (double v : p) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
    }
  }
}

TEST_CASE("parity arithmetic") {
  const ParityEstimate perfect = parity({{Basis::Z, Basis::Z}, {0, 35, 35, 0}});
  CHECK(perfect.value == doctest::Approx(-1.0));
  CHECK(perfect.std_error == doctest::Approx(0.0));
  CHECK(perfect.n == 70);

  const ParityEstimate flat = parity({{Basis::X, Basis::X}, {25, 25, 25, 25}});
  CHECK(flat.value == doctest::Approx(0.0));
  CHECK(flat.std_error == doctest::Approx(0.1));

  const ParityEstimate skew = parity({{Basis::X, Basis::X}, {10, 30, 30, 0}});
  CHECK(skew.value == doctest::Approx(-50.0 / 70.0).epsilon(1e-12));

  CHECK_THROWS_AS(parity({{Basis::X, Basis::X}, {0, 0, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("exact parities equal measured-operator expectations") {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix rho = random_density_matrix(rng, 4);
    for (BasisPair bp : all_basis_pairs()) {
      const BasisStats st = exact_basis_statistics(rho, bp);
      const Operator corr =
          tensor(measured_operator(bp.b1), measured_operator(bp.b2));
      CHECK(st.parity.value == doctest::Approx(expectation(rho, corr)).epsilon(1e-12));
      const Operator m1 = tensor(measured_operator(bp.b1), pauli(Pauli::I));
      const Operator m2 = tensor(pauli(Pauli::I), measured_operator(bp.b2));
      CHECK(st.marginal1.value == doctest::Approx(expectation(rho, m1)).epsilon(1e-12));
      CHECK(st.marginal2.value == doctest::Approx(expectation(rho, m2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fidelity formulas on exact parities") {
  // Perfect anticorrelation in all three doubled bases: the singlet.
  std::map<BasisPair, BasisStats> perfect;
  for (BasisPair bp : required_bases(TargetClass::PsiMinus))
    perfect[bp] = BasisStats{{-1.0, 0.0, 100}, {0.0, 0.0, 100}, {0.0, 0.0, 100}};
  CHECK(fidelity_from_parities(TargetClass::PsiMinus, perfect).value ==
        doctest::Approx(1.0));

  // All parities zero: the maximally mixed state.
  std::map<BasisPair, BasisStats> flat;
  for (BasisPair bp : required_bases(TargetClass::PsiMinus))
    flat[bp] = BasisStats{{0.0, 0.0, 100}, {0.0, 0.0, 100}, {0.0, 0.0, 100}};
  CHECK(fidelity_from_parities(TargetClass::PsiMinus, flat).value ==
        doctest::Approx(0.25));

  // |01> + i|10>: exact parities of the pure state are P_xy = +1,
  // P_yx = -1, P_zz = -1, and the formula returns 1.
  const DensityMatrix chi =
      DensityMatrix::from_pure(target_state(TargetClass::PsiPlusI));
  std::map<BasisPair, BasisStats> chi_stats;
  for (BasisPair bp : required_bases(TargetClass::PsiPlusI))
    chi_stats[bp] = exact_basis_statistics(chi, bp);
  CHECK(chi_stats[{Basis::X, Basis::Y}].parity.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(chi_stats[{Basis::Y, Basis::X}].parity.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(chi_stats[{Basis::Z, Basis::Z}].parity.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fidelity_from_parities(TargetClass::PsiPlusI, chi_stats).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity_from_parities(TargetClass::PsiMinus, chi_stats),
                  std::invalid_argument);
}

TEST_CASE("parity estimators reproduce the exact fidelity for every state") {
  // The central estimator property: on exact statistics each target's
  // formula equals <target| rho |target> for arbitrary rho.
  Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density_matrix(rng, 4);
    std::map<BasisPair, BasisStats> stats;
    for (BasisPair bp : all_basis_pairs())
      stats[bp] = exact_basis_statistics(rho, bp);
    for (TargetClass t : kAllTargetClasses) {
      const double expected = fidelity_pure(rho, target_state(t));
      CHECK(fidelity_from_parities(t, stats).value ==
            doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("separable-target estimator equals the dark-bright fraction") {
  const CountRecord rec{{Basis::Z, Basis::Z}, {3, 10, 80, 7}};
  const BasisStats st = basis_statistics(rec);
  std::map<BasisPair, BasisStats> stats{{rec.basis, st}};
  const FidelityEstimate f =
      fidelity_from_parities(TargetClass::ZeroOne, stats);
  CHECK(f.value == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(f.std_error == doctest::Approx(std::sqrt(0.8 * 0.2 / 100.0)).epsilon(1e-12));
}

TEST_CASE("count record text round trip") {
  const std::vector<CountRecord> records = {
      {{Basis::X, Basis::X}, {1, 2, 3, 4}},
      {{Basis::Y, Basis::Z}, {0, 0, 7, 0}},
  };
  std::ostringstream os;
  write_count_records(os, records);
  std::istringstream in(os.str());
  const auto parsed = parse_count_records(in);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].basis == records[0].basis);
  CHECK(parsed[0].counts == records[0].counts);
  CHECK(parsed[1].counts == records[1].counts);
}

TEST_CASE("count record parser diagnostics") {
  std::istringstream ok("# comment\n\n  Z z 1 2 3 4  # trailing comment\n");
  const auto parsed = parse_count_records(ok);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].basis == BasisPair{Basis::Z, Basis::Z});

  std::istringstream bad_letter("Q Z 1 2 3 4\n");
  CHECK_THROWS_WITH_AS(parse_count_records(bad_letter),
                       doctest::Contains("line 1"), std::runtime_error);

  std::istringstream short_line("\nX Z 1 2\n");
  CHECK_THROWS_WITH_AS(parse_count_records(short_line),
                       doctest::Contains("line 2"), std::runtime_error);

  std::istringstream negative("X Z 1 2 -3 4\n");
  CHECK_THROWS_AS(parse_count_records(negative), std::runtime_error);
}
