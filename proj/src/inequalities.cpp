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

#include "svkit/inequalities.hpp"

#include <cmath>
#include <stdexcept>

#include "svkit/errors.hpp"

namespace svkit {

CorrelatorTable correlator_table(const StateVector& state,
                                 const Scenario& scenario) {
  std::array<std::array<Observable, 2>, 3> obs;
  for (int p = 0; p < 3; ++p) {
    for (int v = 0; v < 2; ++v) {
      obs[p][v] = observable_from_setting(scenario.party_settings[p][v]);
    }
  }
  CorrelatorTable table;
  for (int t = 0; t < 8; ++t) {
    table.values[t] = tensor_expectation(state, obs[0][(t >> 2) & 1],
                                         obs[1][(t >> 1) & 1], obs[2][t & 1]);
  }
  return table;
}

CorrelationStats correlation_stats(const OutcomeDistribution& dist) {
  CorrelationStats stats;
  for (int o = 0; o < 8; ++o) {
    if (outcome_product(o) > 0) {
      stats.p_correlated += dist.probabilities[o];
    } else {
      stats.p_anticorrelated += dist.probabilities[o];
    }
  }
  stats.correlator = stats.p_correlated - stats.p_anticorrelated;
  return stats;
}

SvetlichnyReport eval_svetlichny(const CorrelatorTable& table) {
  SvetlichnyReport report;
  double sum = 0.0;
  for (int t = 0; t < 8; ++t) {
    const double e = table.values[t];
    if (e < -1.0 - 1e-12 || e > 1.0 + 1e-12) {
      throw std::invalid_argument(
          "eval_svetlichny: correlator entry outside [-1, 1]");
    }
    sum += svetlichny_sign(t) * e;
  }
  report.signed_value = sum;
  report.absolute_value = std::abs(sum);
  report.s_probability_form = 0.5 * (8.0 - sum);
  return report;
}

double eval_s_probability_form(std::span<const CorrelationStats> stats) {
  if (stats.size() != 8) {
    throw std::invalid_argument(
        "eval_s_probability_form: expected statistics for all 8 setting "
        "triples");
  }
  double s = 0.0;
  for (int t = 0; t < 8; ++t) {
    s += svetlichny_sign(t) > 0 ? stats[t].p_anticorrelated
                                : stats[t].p_correlated;
  }
  return s;
}

double ghz_xy_correlator(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw std::invalid_argument("ghz_xy_correlator: angles must be finite");
  }
  return -std::cos(alpha + beta - gamma);
}

double anticommutator_bound(const StateVector& state, const Observable& c,
                            const Observable& c_prime) {
  Amplitudes cc = apply_to_party(
      apply_to_party(state.amplitudes, c_prime, 2), c, 2);
  Amplitudes ccr = apply_to_party(
      apply_to_party(state.amplitudes, c, 2), c_prime, 2);
  for (int i = 0; i < 8; ++i) cc[i] += ccr[i];
  const Complex raw = inner_product(state.amplitudes, cc);
  if (std::abs(raw.imag()) > 1e-10) {
    throw ConsistencyError(
        "anticommutator_bound: imaginary residue above tolerance");
  }
  // |x| <= 2 holds for unit observables; rounding can overshoot by one ulp,
  // which would put sqrt on a negative argument.
  double x = raw.real();
  if (x > 2.0) x = 2.0;
  if (x < -2.0) x = -2.0;
  return 2.0 * std::sqrt(2.0 + x) + 2.0 * std::sqrt(2.0 - x);
}

}  // namespace svkit
