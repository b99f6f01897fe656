// Copyright 2026 The svkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "svkit/inequalities.hpp"
#include "svkit/rng.hpp"

using namespace svkit;
using std::numbers::pi;

namespace {

Scenario planar_scenario(const std::array<double, 6>& angles) {
  Scenario s;
  for (int i = 0; i < 6; ++i) {
    s.party_settings[i / 2][i % 2] = planar_setting(angles[i]);
  }
  return s;
}

// The maximal-violation angles: a, a', b, b', c, c'.
const std::array<double, 6> kOptimalAngles = {0.0,    -pi / 2, pi / 4,
                                              -pi / 4, 0.0,    pi / 2};

Scenario random_scenario(const CounterRng& rng, std::uint64_t base) {
  Scenario s;
  for (int i = 0; i < 6; ++i) {
    const double z = rng.uniform_at(base + 2 * i, -1.0, 1.0);
    const double phi = rng.uniform_at(base + 2 * i + 1, -pi, pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    s.party_settings[i / 2][i % 2] = setting_from_direction(
        {r * std::cos(phi), r * std::sin(phi), z});
  }
  return s;
}

StateVector test_random_state(std::uint64_t seed, std::uint64_t stream) {
  const CounterRng rng(seed, stream);
  Amplitudes amps;
  for (int i = 0; i < 8; ++i) {
    const auto [re, im] = rng.gaussian_pair_at(2 * i);
    amps[i] = Complex(re, im);
  }
  return make_state(amps);
}

std::array<CorrelationStats, 8> stats_from_scenario(const StateVector& state,
                                                    const Scenario& scenario) {
  std::array<CorrelationStats, 8> stats;
  for (int t = 0; t < 8; ++t) {
    const std::array<MeasurementSetting, 3> triple = {
        scenario.party_settings[0][(t >> 2) & 1],
        scenario.party_settings[1][(t >> 1) & 1],
        scenario.party_settings[2][t & 1]};
    stats[t] = correlation_stats(outcome_distribution(state, triple));
  }
  return stats;
}

}  // namespace

TEST_CASE("correlator_table on reference scenarios") {
  const StateVector ghz = ghz_state();

  const CorrelatorTable optimal =
      correlator_table(ghz, planar_scenario(kOptimalAngles));
  CHECK(optimal.values[triple_index(0, 0, 0)] ==
        doctest::Approx(-0.7071067811865476).epsilon(1e-13));

  const CorrelatorTable all_x =
      correlator_table(ghz, planar_scenario({0, 0, 0, 0, 0, 0}));
  for (int t = 0; t < 8; ++t) {
    CHECK(all_x.values[t] == doctest::Approx(-1.0).epsilon(1e-13));
  }

  Amplitudes up{};
  up[0] = Complex(1, 0);
  Scenario all_z;
  for (int i = 0; i < 6; ++i) {
    all_z.party_settings[i / 2][i % 2] = setting_from_direction({0, 0, 1});
  }
  const CorrelatorTable product = correlator_table(make_state(up), all_z);
  for (int t = 0; t < 8; ++t) {
    CHECK(product.values[t] == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("correlation_stats splits and relates probabilities") {
  OutcomeDistribution deterministic{};
  deterministic.probabilities[0] = 1.0;  // (+1,+1,+1)
  const CorrelationStats det = correlation_stats(deterministic);
  CHECK(det.p_correlated == doctest::Approx(1.0));
  CHECK(det.p_anticorrelated == doctest::Approx(0.0));
  CHECK(det.correlator == doctest::Approx(1.0));

  OutcomeDistribution uniform{};
  uniform.probabilities.fill(0.125);
  const CorrelationStats uni = correlation_stats(uniform);
  CHECK(uni.p_correlated == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(uni.p_anticorrelated == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(uni.correlator == doctest::Approx(0.0).epsilon(1e-14));

  const MeasurementSetting x = setting_from_direction({1, 0, 0}, "x");
  const CorrelationStats ghz_x =
      correlation_stats(outcome_distribution(ghz_state(), {x, x, x}));
  CHECK(ghz_x.p_anticorrelated == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ghz_x.p_correlated == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(ghz_x.correlator == doctest::Approx(-1.0).epsilon(1e-13));

  // Eq-style identities on random distributions.
  const CounterRng rng(31, 0);
  for (int trial = 0; trial < 100; ++trial) {
    OutcomeDistribution dist{};
    double total = 0;
    for (int o = 0; o < 8; ++o) {
      dist.probabilities[o] = rng.uniform_at(8 * trial + o);
      total += dist.probabilities[o];
    }
    for (double& p : dist.probabilities) p /= total;
    const CorrelationStats s = correlation_stats(dist);
    CHECK(s.p_correlated + s.p_anticorrelated ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.correlator ==
          doctest::Approx(2 * s.p_correlated - 1).epsilon(1e-12));
    CHECK(s.correlator ==
          doctest::Approx(1 - 2 * s.p_anticorrelated).epsilon(1e-12));
  }
}

TEST_CASE("eval_svetlichny reference values") {
  const SvetlichnyReport optimal = eval_svetlichny(
      correlator_table(ghz_state(), planar_scenario(kOptimalAngles)));
  CHECK(optimal.absolute_value ==
        doctest::Approx(5.656854249492381).epsilon(1e-13));
  // Regression constant: the fixed conventions make the signed value
  // negative at these angles.
  CHECK(optimal.signed_value ==
        doctest::Approx(-5.656854249492381).epsilon(1e-13));
  CHECK(optimal.classical_bound == 4.0);
  CHECK(optimal.quantum_bound == doctest::Approx(4.0 * kSqrt2));

  CorrelatorTable flat;
  flat.values.fill(0.25);
  CHECK(eval_svetlichny(flat).signed_value ==
        doctest::Approx(0.0).epsilon(1e-14));

  // The deterministic-looking table matching the sign pattern reaches 8,
  // which no hidden-variable assignment can produce (their maximum is 4).
  CorrelatorTable aligned;
  for (int t = 0; t < 8; ++t) aligned.values[t] = svetlichny_sign(t);
  CHECK(eval_svetlichny(aligned).signed_value == doctest::Approx(8.0));

  CorrelatorTable bad;
  bad.values.fill(1.5);
  CHECK_THROWS_AS(eval_svetlichny(bad), std::invalid_argument);
}

TEST_CASE("eval_svetlichny is linear in the table") {
  const CounterRng rng(37, 0);
  for (int trial = 0; trial < 100; ++trial) {
    CorrelatorTable t1, t2;
    for (int i = 0; i < 8; ++i) {
      t1.values[i] = rng.uniform_at(17 * trial + i, -1.0, 1.0);
      t2.values[i] = rng.uniform_at(17 * trial + 8 + i, -1.0, 1.0);
    }
    const double lambda = rng.uniform_at(17 * trial + 16);
    CorrelatorTable mix;
    for (int i = 0; i < 8; ++i) {
      mix.values[i] = lambda * t1.values[i] + (1 - lambda) * t2.values[i];
    }
    const double expected = lambda * eval_svetlichny(t1).signed_value +
                            (1 - lambda) * eval_svetlichny(t2).signed_value;
    CHECK(eval_svetlichny(mix).signed_value ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("eval_s_probability_form reference values") {
  // At the optimal angles Sv_signed = -4*sqrt(2), so S = 4 + 2*sqrt(2).
  const auto stats =
      stats_from_scenario(ghz_state(), planar_scenario(kOptimalAngles));
  CHECK(eval_s_probability_form(stats) ==
        doctest::Approx(4.0 + 2.0 * kSqrt2).epsilon(1e-13));

  std::array<CorrelationStats, 8> even;
  even.fill({0.5, 0.5, 0.0});
  CHECK(eval_s_probability_form(even) == doctest::Approx(4.0));

  std::array<CorrelationStats, 8> three;
  CHECK_THROWS_AS(
      eval_s_probability_form(std::span(three.data(), 3)),
      std::invalid_argument);
}

TEST_CASE("signed value equals 8 - 2S from shared distributions") {
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector state = test_random_state(41, trial);
    const CounterRng rng(43, trial);
    const Scenario scenario = random_scenario(rng, 0);
    const double sv =
        eval_svetlichny(correlator_table(state, scenario)).signed_value;
    const double s =
        eval_s_probability_form(stats_from_scenario(state, scenario));
    CHECK(sv == doctest::Approx(8.0 - 2.0 * s).epsilon(1e-12));
  }
}

TEST_CASE("ghz_xy_correlator closed form") {
  CHECK(ghz_xy_correlator(0, 0, 0) == doctest::Approx(-1.0));
  CHECK(ghz_xy_correlator(0, pi / 4, 0) ==
        doctest::Approx(-0.7071067811865476).epsilon(1e-14));
  CHECK(ghz_xy_correlator(0, pi / 2, 0) ==
        doctest::Approx(0.0).epsilon(1e-14));

  const StateVector ghz = ghz_state();
  const CounterRng rng(47, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double alpha = rng.uniform_at(3 * trial, -pi, pi);
    const double beta = rng.uniform_at(3 * trial + 1, -pi, pi);
    const double gamma = rng.uniform_at(3 * trial + 2, -pi, pi);
    const double quantum = tensor_expectation(
        ghz, observable_from_setting(planar_setting(alpha)),
        observable_from_setting(planar_setting(beta)),
        observable_from_setting(planar_setting(gamma)));
    CHECK(ghz_xy_correlator(alpha, beta, gamma) ==
          doctest::Approx(quantum).epsilon(1e-12));
  }
}

TEST_CASE("anticommutator_bound reference values") {
  const StateVector ghz = ghz_state();
  const auto obs = [](double nx, double ny, double nz) {
    return observable_from_setting(setting_from_direction({nx, ny, nz}));
  };
  CHECK(anticommutator_bound(ghz, obs(1, 0, 0), obs(0, 1, 0)) ==
        doctest::Approx(4.0 * kSqrt2).epsilon(1e-13));
  // Identical settings force x = 2, where sqrt(2-x) has unbounded slope:
  // a one-ulp rounding of x legitimately moves the bound by ~1e-8.
  CHECK(anticommutator_bound(ghz, obs(0, 0, 1), obs(0, 0, 1)) ==
        doctest::Approx(4.0).epsilon(1e-7));
  CHECK(anticommutator_bound(ghz, obs(0, 0, 1), obs(1, 0, 0)) ==
        doctest::Approx(4.0 * kSqrt2).epsilon(1e-13));

  const StateVector other = test_random_state(53, 0);
  CHECK(anticommutator_bound(other, obs(1, 0, 0), obs(0, 1, 0)) ==
        doctest::Approx(4.0 * kSqrt2).epsilon(1e-13));
}

TEST_CASE("anticommutator bound dominates |Sv| and respects 4*sqrt(2)") {
  for (int trial = 0; trial < 10000; ++trial) {
    const StateVector state = test_random_state(59, trial);
    const CounterRng rng(61, trial);
    const Scenario scenario = random_scenario(rng, 0);
    const double sv =
        eval_svetlichny(correlator_table(state, scenario)).absolute_value;
    const double bound = anticommutator_bound(
        state, observable_from_setting(scenario.party_settings[2][0]),
        observable_from_setting(scenario.party_settings[2][1]));
    CHECK(sv <= bound + 1e-9);
    CHECK(bound <= 4.0 * kSqrt2 + 1e-12);
    CHECK(sv <= 4.0 * kSqrt2 + 1e-9);
  }
}
