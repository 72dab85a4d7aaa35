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

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include <doctest.h>

#include "heraldgate/rates.hpp"

using namespace heraldgate;

TEST_CASE("per-photon detection probability of the reference budget") {
  const RateBudget b;  // defaults are the reference values
  // 0.5 * 0.02 * 0.2 * 0.95 * 0.15
  CHECK(std::abs(per_photon_detection_prob(b) - 2.85e-4) < 1e-16);

  RateBudget perfect{1.0, 1.0, 1.0, 1.0, 1.0, 0.0};
  CHECK(per_photon_detection_prob(perfect) == doctest::Approx(1.0));

  RateBudget dead = b;
  dead.eta = 0.0;
  CHECK(per_photon_detection_prob(dead) == 0.0);
}

TEST_CASE("gate success probability") {
  const RateBudget b;
  // (2.85e-4)^2 = 8.1225e-8 at p_psi = 1 (well, p_psi <= 1/2; the squared
  // photon factor alone is checked through p_psi = 1/2 doubled).
  const double squared = per_photon_detection_prob(b) * per_photon_detection_prob(b);
  CHECK(squared == doctest::Approx(8.1225e-8).epsilon(1e-12));
  CHECK(gate_success_probability(b, 0.5) == doctest::Approx(0.5 * 8.1225e-8).epsilon(1e-12));

  // Published rounded figures: the squared factor is within 5% of 8.5e-8
  // and the quarter-probability gate rate within 10% of 2.2e-8.
  CHECK(std::abs(squared - 8.5e-8) / 8.5e-8 < 0.05);
  CHECK(std::abs(gate_success_probability(b, 0.25) - 2.2e-8) / 2.2e-8 < 0.10);

  CHECK(gate_success_probability(b, 0.0) == 0.0);
  CHECK_THROWS_AS(gate_success_probability(b, 0.6), std::invalid_argument);
}

TEST_CASE("expected event counts") {
  RateBudget b;
  b.attempt_rate_hz = 1e5;
  // 1e5 * 3600 * (0.25 * 8.1225e-8) ~ 7.3 events per hour.
  CHECK(expected_events(b, 0.25, 3600.0) == doctest::Approx(7.31025).epsilon(1e-6));

  RateBudget unknown;  // attempt rate defaults to 0 = unknown
  CHECK(expected_events(unknown, 0.25, 3600.0) == 0.0);
  CHECK(expected_events(b, 0.25, 0.0) == 0.0);
}

TEST_CASE("success probability is quadratic in the photon probability") {
  const RateBudget base;
  for (double s : {0.5, 1.0 / std::sqrt(2.0)}) {
    RateBudget scaled = base;
    scaled.p_pi *= s;
    scaled.solid_angle_fraction *= s;
    scaled.t_fiber *= s;
    scaled.t_optics *= s;
    scaled.eta *= s;
    const double ratio_photon =
        per_photon_detection_prob(scaled) / per_photon_detection_prob(base);
    const double ratio_gate = gate_success_probability(scaled, 0.25) /
                              gate_success_probability(base, 0.25);
    CHECK(ratio_gate == doctest::Approx(ratio_photon * ratio_photon).epsilon(1e-12));

    // Scaling a single efficiency by s scales the gate rate by s^2.
    RateBudget one_factor = base;
    one_factor.eta *= s;
    CHECK(gate_success_probability(one_factor, 0.25) ==
          doctest::Approx(s * s * gate_success_probability(base, 0.25)).epsilon(1e-12));
  }
}

TEST_CASE("success probability is monotone in every factor") {
  const RateBudget base;
  const double reference = gate_success_probability(base, 0.25);
  const auto bumped = [&](auto field) {
    RateBudget b = base;
    field(b);
    return gate_success_probability(b, 0.25);
  };
  CHECK(bumped([](RateBudget& b) { b.p_pi = 0.6; }) >= reference);
  CHECK(bumped([](RateBudget& b) { b.solid_angle_fraction = 0.03; }) >= reference);
  CHECK(bumped([](RateBudget& b) { b.t_fiber = 0.3; }) >= reference);
  CHECK(bumped([](RateBudget& b) { b.t_optics = 0.99; }) >= reference);
  CHECK(bumped([](RateBudget& b) { b.eta = 0.2; }) >= reference);
}

TEST_CASE("budget validation") {
  RateBudget bad;
  bad.eta = 1.2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = RateBudget{};
  bad.attempt_rate_hz = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
