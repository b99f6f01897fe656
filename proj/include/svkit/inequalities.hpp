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

#pragma once

#include <array>
#include <span>

#include "svkit/quantum.hpp"

namespace svkit {

/// |Sv| <= 4 for every hybrid local/two-particle-nonlocal model.
inline constexpr double kClassicalBound = 4.0;
/// |Sv| <= 4*sqrt(2) for every quantum state, the analogue of the Tsirelson
/// bound for CHSH.
inline constexpr double kQuantumBound = 4.0 * kSqrt2;

/// Index of the setting triple (x,y,z), each 0 for the unprimed and 1 for
/// the primed choice. Party A occupies bit 2, B bit 1, C bit 0.
constexpr int triple_index(int x, int y, int z) {
  return (x << 2) | (y << 1) | z;
}

/// Sign of triple `t` in the Svetlichny combination: +1 when at most one
/// choice is primed, -1 otherwise. Over the triple order
/// (ABC, ABC', AB'C, AB'C', A'BC, A'BC', A'B'C, A'B'C') this yields the
/// pattern (+,+,+,-,+,-,-,-).
constexpr int svetlichny_sign(int t) {
  int primed = (t & 1) + ((t >> 1) & 1) + ((t >> 2) & 1);
  return primed <= 1 ? +1 : -1;
}

/// The eight full three-party correlators E(X Y Z), indexed by triple_index.
struct CorrelatorTable {
  std::array<double, 8> values{};
};

/// Correlation/anti-correlation split of one outcome distribution:
/// p_correlated is the probability that a = b*c, and the correlator obeys
/// E = 2*p_correlated - 1 = 1 - 2*p_anticorrelated.
struct CorrelationStats {
  double p_correlated = 0.0;
  double p_anticorrelated = 0.0;
  double correlator = 0.0;
};

struct SvetlichnyReport {
  double signed_value = 0.0;
  double absolute_value = 0.0;
  /// The probability-form expression S; signed_value = 8 - 2*S.
  double s_probability_form = 0.0;
  double classical_bound = kClassicalBound;
  double quantum_bound = kQuantumBound;
};

/// Evaluates all eight correlators of `scenario` on `state`.
CorrelatorTable correlator_table(const StateVector& state,
                                 const Scenario& scenario);

/// Correlation statistics of a single outcome distribution.
CorrelationStats correlation_stats(const OutcomeDistribution& dist);

/// Signed and absolute Svetlichny value of a correlator table. Throws
/// std::invalid_argument if an entry lies outside [-1,1] beyond 1e-12.
SvetlichnyReport eval_svetlichny(const CorrelatorTable& table);

/// The probability-form expression: anti-correlation probability for the
/// four plus-signed triples, correlation probability for the four
/// minus-signed ones. `stats` must hold exactly 8 entries in triple_index
/// order; any other size is rejected.
double eval_s_probability_form(std::span<const CorrelationStats> stats);

/// Closed-form correlator -cos(alpha + beta - gamma) of the GHZ state under
/// xy-plane measurements at the given angles from the x axis.
double ghz_xy_correlator(double alpha, double beta, double gamma);

/// The settings-dependent quantum bound 2*sqrt(2+x) + 2*sqrt(2-x) with
/// x = <state| C C' + C' C |state> acting on party 3. Dominates |Sv| for any
/// choice of the remaining settings and never exceeds 4*sqrt(2).
double anticommutator_bound(const StateVector& state, const Observable& c,
                            const Observable& c_prime);

}  // namespace svkit
