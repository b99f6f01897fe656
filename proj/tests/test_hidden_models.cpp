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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "svkit/errors.hpp"
#include "svkit/hidden_models.hpp"
#include "svkit/optimizer.hpp"
#include "svkit/rng.hpp"

using namespace svkit;
using std::numbers::pi;

namespace {

NetworkAssignment assignment_from_bits(int bits) {
  NetworkAssignment a;
  for (int i = 0; i < 4; ++i) a.pair_outputs[i] = (bits >> i) & 1 ? -1 : +1;
  for (int i = 0; i < 2; ++i) {
    a.singleton_outputs[i] = (bits >> (4 + i)) & 1 ? -1 : +1;
  }
  return a;
}

// Correlator table of a network assignment read as a (12)-3 strategy.
CorrelatorTable assignment_table(const NetworkAssignment& a) {
  CorrelatorTable table;
  for (int t = 0; t < 8; ++t) {
    const int x = (t >> 2) & 1, y = (t >> 1) & 1, z = t & 1;
    table.values[t] =
        double(a.pair_outputs[2 * x + y] * a.singleton_outputs[z]);
  }
  return table;
}

// Degenerate correlation statistics induced by a deterministic assignment.
std::array<CorrelationStats, 8> assignment_stats(const NetworkAssignment& a) {
  std::array<CorrelationStats, 8> stats;
  const CorrelatorTable table = assignment_table(a);
  for (int t = 0; t < 8; ++t) {
    stats[t].p_correlated = table.values[t] > 0 ? 1.0 : 0.0;
    stats[t].p_anticorrelated = 1.0 - stats[t].p_correlated;
    stats[t].correlator = table.values[t];
  }
  return stats;
}

HybridModel random_hybrid_model(std::uint64_t seed, std::uint64_t stream) {
  const CounterRng rng(seed, stream);
  HybridModel model;
  double total = 0;
  for (int i = 0; i < 3; ++i) {
    model.weights[i] = rng.uniform_at(i);
    total += model.weights[i];
  }
  for (double& q : model.weights) q /= total;
  std::uint64_t counter = 3;
  for (int part = 0; part < 3; ++part) {
    const int strategies = 1 + int(rng.bits_at(counter++) % 4);
    double mixture_total = 0;
    for (int k = 0; k < strategies; ++k) {
      BipartitionStrategy s;
      s.partition = static_cast<Bipartition>(part);
      for (int i = 0; i < 4; ++i) {
        s.pair_outputs[i] = rng.bits_at(counter++) & 1 ? -1 : +1;
      }
      for (int i = 0; i < 2; ++i) {
        s.singleton_outputs[i] = rng.bits_at(counter++) & 1 ? -1 : +1;
      }
      const double w = rng.uniform_at(counter++) + 1e-3;
      model.mixtures[part].push_back({w, s});
      mixture_total += w;
    }
    for (auto& [w, s] : model.mixtures[part]) w /= mixture_total;
  }
  return model;
}

}  // namespace

TEST_CASE("bonds_satisfied on reference assignments") {
  // All pair outputs +1, c = +1, c' = -1: only the AB-C' anti-correlation
  // bond and the A'B'-C correlation bond hold (exhaustive-oracle value).
  NetworkAssignment a;
  a.pair_outputs = {+1, +1, +1, +1};
  a.singleton_outputs = {+1, -1};
  CHECK(bonds_satisfied(a) == 2);

  NetworkAssignment bad;
  bad.pair_outputs = {0, 1, 1, 1};
  CHECK_THROWS_AS(bonds_satisfied(bad), std::invalid_argument);
}

TEST_CASE("network enumeration finds the frustration window") {
  const NetworkSummary summary = enumerate_network_assignments();
  CHECK(summary.min_satisfied == 2);
  CHECK(summary.max_satisfied == 6);

  int total = 0;
  for (int k = 0; k <= 8; ++k) total += summary.histogram[k];
  CHECK(total == 64);
  CHECK(summary.histogram[0] == 0);
  CHECK(summary.histogram[8] == 0);
  // Exhaustive-oracle histogram.
  CHECK(summary.histogram[2] == 16);
  CHECK(summary.histogram[4] == 32);
  CHECK(summary.histogram[6] == 16);

  // An assignment reaching six satisfied bonds exists.
  bool found_six = false;
  for (int bits = 0; bits < 64; ++bits) {
    if (bonds_satisfied(assignment_from_bits(bits)) == 6) found_six = true;
  }
  CHECK(found_six);
}

TEST_CASE("S of a deterministic assignment equals its satisfied bonds") {
  for (int bits = 0; bits < 64; ++bits) {
    const NetworkAssignment a = assignment_from_bits(bits);
    const double s = eval_s_probability_form(assignment_stats(a));
    CHECK(s == doctest::Approx(double(bonds_satisfied(a))).epsilon(1e-14));
    // And the signed value honours Sv = 8 - 2S, staying within +-4.
    const double sv = eval_svetlichny(assignment_table(a)).signed_value;
    CHECK(sv == doctest::Approx(8.0 - 2.0 * s).epsilon(1e-14));
    CHECK(std::abs(sv) <= 4.0);
  }
}

TEST_CASE("simulate_local_model reference mixtures") {
  LocalStrategy all_plus;
  const ProbabilityTable single =
      simulate_local_model(std::array{std::pair{1.0, all_plus}});
  for (int t = 0; t < 8; ++t) {
    CHECK(single.p[t][0] == doctest::Approx(1.0));
    for (int o = 1; o < 8; ++o) CHECK(single.p[t][o] == 0.0);
  }

  std::vector<std::pair<double, LocalStrategy>> uniform;
  for (int bits = 0; bits < 64; ++bits) {
    LocalStrategy s;
    for (int p = 0; p < 3; ++p) {
      for (int v = 0; v < 2; ++v) {
        s.outputs[p][v] = (bits >> (2 * p + v)) & 1 ? -1 : +1;
      }
    }
    uniform.push_back({1.0 / 64, s});
  }
  const CorrelatorTable correlators =
      correlators_from_probabilities(simulate_local_model(uniform));
  for (int t = 0; t < 8; ++t) {
    CHECK(correlators.values[t] == doctest::Approx(0.0).epsilon(1e-14));
  }

  const CounterRng rng(67, 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<double, LocalStrategy>> mixture;
    double total = 0;
    for (int k = 0; k < 3; ++k) {
      LocalStrategy s;
      for (int p = 0; p < 3; ++p) {
        for (int v = 0; v < 2; ++v) {
          s.outputs[p][v] =
              rng.bits_at(100 * trial + 10 * k + 2 * p + v) & 1 ? -1 : +1;
        }
      }
      const double w = rng.uniform_at(100 * trial + 10 * k + 9) + 1e-3;
      mixture.push_back({w, s});
      total += w;
    }
    for (auto& [w, s] : mixture) w /= total;
    const double sv =
        eval_svetlichny(
            correlators_from_probabilities(simulate_local_model(mixture)))
            .absolute_value;
    CHECK(sv <= 4.0 + 1e-12);
  }

  std::vector<std::pair<double, LocalStrategy>> off{{0.5, all_plus}};
  CHECK_THROWS_AS(simulate_local_model(off), std::invalid_argument);
}

TEST_CASE("simulate_hybrid_model reference models") {
  // Single deterministic (12)-3 strategy: correlators factor into the pair
  // product times the singleton output.
  BipartitionStrategy strategy;
  strategy.partition = Bipartition::kAB_C;
  strategy.pair_outputs = {+1, -1, -1, +1};
  strategy.singleton_outputs = {+1, -1};
  HybridModel pure;
  pure.weights = {1.0, 0.0, 0.0};
  pure.mixtures[0].push_back({1.0, strategy});
  const ProbabilityTable table = simulate_hybrid_model(pure);
  const CorrelatorTable correlators = correlators_from_probabilities(table);
  for (int t = 0; t < 8; ++t) {
    const int x = (t >> 2) & 1, y = (t >> 1) & 1, z = t & 1;
    CHECK(correlators.values[t] ==
          doctest::Approx(double(strategy.pair_outputs[2 * x + y] *
                                 strategy.singleton_outputs[z])));
    double row = 0;
    for (int o = 0; o < 8; ++o) row += table.p[t][o];
    CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
  }

  // No-signaling from the pair to the singleton: C's marginal depends only
  // on C's setting.
  for (int z = 0; z < 2; ++z) {
    double reference = -10;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const int t = (x << 2) | (y << 1) | z;
        double marginal_plus = 0;
        for (int o = 0; o < 8; ++o) {
          if ((o & 1) == 0) marginal_plus += table.p[t][o];
        }
        if (reference < -1) reference = marginal_plus;
        CHECK(marginal_plus == doctest::Approx(reference).epsilon(1e-12));
      }
    }
  }

  // Permutation-symmetric weights with matching strategies give a
  // permutation-symmetric correlator table.
  HybridModel symmetric;
  symmetric.weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  for (int part = 0; part < 3; ++part) {
    BipartitionStrategy s;
    s.partition = static_cast<Bipartition>(part);
    s.pair_outputs = {+1, -1, -1, +1};
    s.singleton_outputs = {+1, -1};
    symmetric.mixtures[part].push_back({1.0, s});
  }
  const CorrelatorTable sym =
      correlators_from_probabilities(simulate_hybrid_model(symmetric));
  for (int t = 0; t < 8; ++t) {
    const int x = (t >> 2) & 1, y = (t >> 1) & 1, z = t & 1;
    // Swapping any two parties' choices leaves the entry unchanged.
    CHECK(sym.values[t] ==
          doctest::Approx(sym.values[(y << 2) | (x << 1) | z])
              .epsilon(1e-12));
    CHECK(sym.values[t] ==
          doctest::Approx(sym.values[(x << 2) | (z << 1) | y])
              .epsilon(1e-12));
  }

  HybridModel invalid;
  invalid.weights = {0.7, 0.2, 0.2};
  CHECK_THROWS_AS(simulate_hybrid_model(invalid), std::invalid_argument);
}

TEST_CASE("random hybrid models respect the classical bound") {
  for (int trial = 0; trial < 100; ++trial) {
    const HybridModel model = random_hybrid_model(71, trial);
    const CorrelatorTable table =
        correlators_from_probabilities(simulate_hybrid_model(model));
    CHECK(eval_svetlichny(table).absolute_value <= 4.0 + 1e-9);
  }
}

TEST_CASE("polytope vertices") {
  const std::vector<CorrelatorTable> vertices = svetlichny_polytope_vertices();
  // 3 partitions x 2^6 strategies collapse to 64 distinct tables.
  CHECK(vertices.size() == 64);

  // Re-derive all 192 raw strategy tables through the simulator and check
  // each lands in the deduplicated set.
  std::set<std::array<double, 8>> vertex_lookup;
  for (const CorrelatorTable& v : vertices) vertex_lookup.insert(v.values);
  int raw_count = 0;
  for (int part = 0; part < 3; ++part) {
    for (int bits = 0; bits < 64; ++bits) {
      BipartitionStrategy s;
      s.partition = static_cast<Bipartition>(part);
      for (int i = 0; i < 4; ++i) s.pair_outputs[i] = (bits >> i) & 1 ? -1 : +1;
      for (int i = 0; i < 2; ++i) {
        s.singleton_outputs[i] = (bits >> (4 + i)) & 1 ? -1 : +1;
      }
      HybridModel pure;
      pure.weights = {0.0, 0.0, 0.0};
      pure.weights[part] = 1.0;
      pure.mixtures[part].push_back({1.0, s});
      const CorrelatorTable table =
          correlators_from_probabilities(simulate_hybrid_model(pure));
      ++raw_count;
      CHECK(vertex_lookup.count(table.values) == 1);
    }
  }
  CHECK(raw_count == 192);

  double max_sv = 0;
  for (const CorrelatorTable& v : vertices) {
    for (double e : v.values) CHECK(std::abs(e) == 1.0);
    max_sv = std::max(max_sv, eval_svetlichny(v).absolute_value);
    CHECK(eval_svetlichny(v).absolute_value <= 4.0);
  }
  CHECK(max_sv == doctest::Approx(4.0));

  // Closure under single-party output flips and party permutations.
  std::set<std::array<double, 8>> vertex_set;
  for (const CorrelatorTable& v : vertices) vertex_set.insert(v.values);

  for (int party = 0; party < 3; ++party) {
    for (int variant = 0; variant < 2; ++variant) {
      std::set<std::array<double, 8>> flipped;
      for (const CorrelatorTable& v : vertices) {
        std::array<double, 8> w = v.values;
        for (int t = 0; t < 8; ++t) {
          if (((t >> (2 - party)) & 1) == variant) w[t] = -w[t];
        }
        flipped.insert(w);
      }
      CHECK(flipped == vertex_set);
    }
  }

  const std::array<std::array<int, 3>, 5> permutations = {
      {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  for (const auto& perm : permutations) {
    std::set<std::array<double, 8>> permuted;
    for (const CorrelatorTable& v : vertices) {
      std::array<double, 8> w{};
      for (int t = 0; t < 8; ++t) {
        const std::array<int, 3> choice = {(t >> 2) & 1, (t >> 1) & 1, t & 1};
        const int source = (choice[perm[0]] << 2) | (choice[perm[1]] << 1) |
                           choice[perm[2]];
        w[t] = v.values[source];
      }
      permuted.insert(w);
    }
    CHECK(permuted == vertex_set);
  }
}

TEST_CASE("polytope membership verdicts") {
  CorrelatorTable zeros;
  const MembershipVerdict center = polytope_membership(zeros, 1e-9);
  CHECK(center.inside);
  double weight_sum = 0;
  for (double w : center.weights) {
    CHECK(w >= -1e-12);
    weight_sum += w;
  }
  CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-9));

  const std::vector<CorrelatorTable> vertices = svetlichny_polytope_vertices();
  const MembershipVerdict vertex = polytope_membership(vertices[17], 1e-9);
  CHECK(vertex.inside);
  // The weights must reconstruct the vertex exactly (up to tolerance).
  std::array<double, 8> rebuilt{};
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (int k = 0; k < 8; ++k) {
      rebuilt[k] += vertex.weights[i] * vertices[i].values[k];
    }
  }
  for (int k = 0; k < 8; ++k) {
    CHECK(rebuilt[k] == doctest::Approx(vertices[17].values[k]).epsilon(1e-9));
  }

  const CorrelatorTable quantum = correlator_table(
      ghz_state(), verify_optimal_angles().scenario);
  const MembershipVerdict outside = polytope_membership(quantum, 1e-9);
  CHECK_FALSE(outside.inside);
  CHECK(outside.violation_margin > 1e-3);

  CHECK_THROWS_AS(polytope_membership(zeros, 1e-13), std::invalid_argument);
  CHECK_THROWS_AS(polytope_membership(zeros, 1e-3), std::invalid_argument);
}

TEST_CASE("random vertex mixtures stay inside") {
  const std::vector<CorrelatorTable> vertices = svetlichny_polytope_vertices();
  const CounterRng rng(73, 0);
  for (int trial = 0; trial < 100; ++trial) {
    CorrelatorTable mix;
    double total = 0;
    std::array<double, 5> weights;
    std::array<size_t, 5> picks;
    for (int k = 0; k < 5; ++k) {
      weights[k] = rng.uniform_at(11 * trial + 2 * k) + 1e-3;
      picks[k] = rng.bits_at(11 * trial + 2 * k + 1) % vertices.size();
      total += weights[k];
    }
    for (int k = 0; k < 5; ++k) {
      for (int i = 0; i < 8; ++i) {
        mix.values[i] += weights[k] / total * vertices[picks[k]].values[i];
      }
    }
    CHECK(polytope_membership(mix, 1e-9).inside);
  }
}

TEST_CASE("hybrid model tables round-trip through membership") {
  for (int trial = 0; trial < 25; ++trial) {
    const HybridModel model = random_hybrid_model(79, trial);
    const CorrelatorTable table =
        correlators_from_probabilities(simulate_hybrid_model(model));
    CHECK(polytope_membership(table, 1e-9).inside);
  }
}
