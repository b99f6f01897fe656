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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "svkit/inequalities.hpp"

namespace svkit {

/// Deterministic +-1 assignment on the frustrated correlation network: one
/// joint output per composite measurement of the nonlocal pair (AB, AB',
/// A'B, A'B', indexed 2x+y) and one output per setting of the isolated
/// party (C, C').
struct NetworkAssignment {
  std::array<int, 4> pair_outputs{+1, +1, +1, +1};
  std::array<int, 2> singleton_outputs{+1, +1};
};

/// Number of the eight network bonds satisfied by `assignment`: a bond for
/// a plus-signed Svetlichny triple is an anti-correlation bond (satisfied
/// when pair output * singleton output = -1), a minus-signed triple gives a
/// correlation bond (satisfied at +1).
int bonds_satisfied(const NetworkAssignment& assignment);

struct NetworkSummary {
  int min_satisfied = 0;
  int max_satisfied = 0;
  /// histogram[k] = number of the 64 assignments satisfying exactly k bonds.
  std::array<int, 9> histogram{};
};

/// Exhausts all 2^6 = 64 network assignments.
NetworkSummary enumerate_network_assignments();

/// Which pair of parties is allowed arbitrary joint (nonlocal) behavior.
enum class Bipartition { kAB_C = 0, kBC_A = 1, kAC_B = 2 };

/// The party left out of a bipartition (0 = A, 1 = B, 2 = C).
constexpr int isolated_party(Bipartition p) {
  switch (p) {
    case Bipartition::kAB_C: return 2;
    case Bipartition::kBC_A: return 0;
    case Bipartition::kAC_B: return 1;
  }
  return -1;
}

/// Deterministic strategy for one bipartition: a +-1 joint product per pair
/// setting combination (indexed 2*first + second over the pair's two
/// parties in party order) and a +-1 output per singleton setting.
struct BipartitionStrategy {
  Bipartition partition = Bipartition::kAB_C;
  std::array<int, 4> pair_outputs{+1, +1, +1, +1};
  std::array<int, 2> singleton_outputs{+1, +1};
};

/// Finite mixture over deterministic strategies of one partition.
using StrategyMixture = std::vector<std::pair<double, BipartitionStrategy>>;

/// Convex mixture of the three bipartition terms: weights (q12, q23, q13)
/// summing to 1, plus one strategy mixture per partition (in the order
/// kAB_C, kBC_A, kAC_B). Mixtures for partitions of zero weight may be
/// empty.
struct HybridModel {
  std::array<double, 3> weights{1.0, 0.0, 0.0};
  std::array<StrategyMixture, 3> mixtures;
};

/// Fully local deterministic strategy: outputs[party][setting] in {+1,-1}.
struct LocalStrategy {
  std::array<std::array<int, 2>, 3> outputs{{{+1, +1}, {+1, +1}, {+1, +1}}};
};

/// Full conditional probability table: p[triple_index][outcome_index].
struct ProbabilityTable {
  std::array<std::array<double, 8>, 8> p{};

  OutcomeDistribution distribution(int triple) const {
    return OutcomeDistribution{p[triple]};
  }
};

/// Correlators E = sum_o (abc) P(o) of each setting triple.
CorrelatorTable correlators_from_probabilities(const ProbabilityTable& table);

/// Mixture of fully local deterministic responses. Weights must be
/// nonnegative and sum to 1 within 1e-12.
ProbabilityTable simulate_local_model(
    std::span<const std::pair<double, LocalStrategy>> mixture);

/// The q-weighted mixture of the three bipartition terms. The isolated
/// party's marginal never depends on the pair's settings; the joint outcome
/// of the pair is split evenly between the two sign patterns consistent
/// with its product output.
ProbabilityTable simulate_hybrid_model(const HybridModel& model);

/// Correlator tables of all deterministic bipartition strategies: 64 per
/// partition, 192 in total, with exact duplicates across partitions removed
/// (entries are +-1, so equality is exact).
std::vector<CorrelatorTable> svetlichny_polytope_vertices();

struct MembershipVerdict {
  bool inside = false;
  /// Convex coefficients over svetlichny_polytope_vertices() order; filled
  /// when inside.
  std::vector<double> weights;
  /// Max-norm distance from the target to the nearest polytope point.
  double violation_margin = 0.0;
};

/// Decides whether `target` lies in the convex hull of the hybrid-model
/// vertices by solving a Chebyshev-distance feasibility program: inside iff
/// the minimal max-norm reconstruction error is at most `tolerance`.
/// `tolerance` must lie in [1e-12, 1e-6]. Throws SolverError if the simplex
/// iteration cap is reached.
MembershipVerdict polytope_membership(const CorrelatorTable& target,
                                      double tolerance);

}  // namespace svkit
