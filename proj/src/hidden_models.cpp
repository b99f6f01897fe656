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

#include "svkit/hidden_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "svkit/errors.hpp"
#include "svkit/lp.hpp"

namespace svkit {

namespace {

constexpr double kWeightTol = 1e-12;

bool is_sign(int v) { return v == +1 || v == -1; }

void check_assignment_entries(std::span<const int> pair,
                              std::span<const int> single,
                              const char* what) {
  for (int v : pair) {
    if (!is_sign(v)) throw std::invalid_argument(std::string(what) +
                                                 ": pair output not +-1");
  }
  for (int v : single) {
    if (!is_sign(v)) throw std::invalid_argument(std::string(what) +
                                                 ": singleton output not +-1");
  }
}

// Members of the nonlocal pair, in party order.
constexpr std::array<int, 2> pair_members(Bipartition p) {
  switch (p) {
    case Bipartition::kAB_C: return {0, 1};
    case Bipartition::kBC_A: return {1, 2};
    case Bipartition::kAC_B: return {0, 2};
  }
  return {0, 1};
}

// Correlator table of one deterministic bipartition strategy: the product
// of the pair's joint output and the singleton output per setting triple.
CorrelatorTable strategy_correlators(const BipartitionStrategy& s) {
  const auto members = pair_members(s.partition);
  const int single = isolated_party(s.partition);
  CorrelatorTable table;
  for (int t = 0; t < 8; ++t) {
    const auto choice = [&](int party) { return (t >> (2 - party)) & 1; };
    const int pair_idx = 2 * choice(members[0]) + choice(members[1]);
    table.values[t] =
        double(s.pair_outputs[pair_idx] * s.singleton_outputs[choice(single)]);
  }
  return table;
}

// Conditional outcome probabilities of one deterministic bipartition
// strategy. Only the pair's product is pinned down; the two consistent
// joint sign patterns are weighted evenly.
ProbabilityTable strategy_probabilities(const BipartitionStrategy& s) {
  const auto members = pair_members(s.partition);
  const int single = isolated_party(s.partition);
  ProbabilityTable table;
  for (int t = 0; t < 8; ++t) {
    const auto choice = [&](int party) { return (t >> (2 - party)) & 1; };
    const int pair_idx = 2 * choice(members[0]) + choice(members[1]);
    const int product = s.pair_outputs[pair_idx];
    const int single_out = s.singleton_outputs[choice(single)];
    for (int o = 0; o < 8; ++o) {
      const auto outcome = [&](int party) {
        return ((o >> (2 - party)) & 1) ? -1 : +1;
      };
      if (outcome(single) != single_out) continue;
      if (outcome(members[0]) * outcome(members[1]) != product) continue;
      table.p[t][o] = 0.5;
    }
  }
  return table;
}

}  // namespace

int bonds_satisfied(const NetworkAssignment& assignment) {
  check_assignment_entries(assignment.pair_outputs,
                           assignment.singleton_outputs, "bonds_satisfied");
  int satisfied = 0;
  for (int t = 0; t < 8; ++t) {
    const int x = (t >> 2) & 1, y = (t >> 1) & 1, z = t & 1;
    const int product =
        assignment.pair_outputs[2 * x + y] * assignment.singleton_outputs[z];
    const int wanted = svetlichny_sign(t) > 0 ? -1 : +1;
    if (product == wanted) ++satisfied;
  }
  return satisfied;
}

NetworkSummary enumerate_network_assignments() {
  NetworkSummary summary;
  summary.min_satisfied = 8;
  summary.max_satisfied = 0;
  for (int bits = 0; bits < 64; ++bits) {
    NetworkAssignment a;
    for (int i = 0; i < 4; ++i) a.pair_outputs[i] = (bits >> i) & 1 ? -1 : +1;
    for (int i = 0; i < 2; ++i) {
      a.singleton_outputs[i] = (bits >> (4 + i)) & 1 ? -1 : +1;
    }
    const int n = bonds_satisfied(a);
    ++summary.histogram[n];
    summary.min_satisfied = std::min(summary.min_satisfied, n);
    summary.max_satisfied = std::max(summary.max_satisfied, n);
  }
  return summary;
}

CorrelatorTable correlators_from_probabilities(const ProbabilityTable& table) {
  CorrelatorTable out;
  for (int t = 0; t < 8; ++t) {
    double e = 0.0;
    for (int o = 0; o < 8; ++o) e += outcome_product(o) * table.p[t][o];
    out.values[t] = e;
  }
  return out;
}

ProbabilityTable simulate_local_model(
    std::span<const std::pair<double, LocalStrategy>> mixture) {
  double total = 0.0;
  for (const auto& [w, strategy] : mixture) {
    if (w < 0.0) {
      throw std::invalid_argument("simulate_local_model: negative weight");
    }
    for (const auto& party : strategy.outputs) {
      check_assignment_entries(party, {}, "simulate_local_model");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTol) {
    throw std::invalid_argument(
        "simulate_local_model: weights do not sum to 1");
  }
  ProbabilityTable table;
  for (const auto& [w, strategy] : mixture) {
    for (int t = 0; t < 8; ++t) {
      int o = 0;
      for (int party = 0; party < 3; ++party) {
        const int choice = (t >> (2 - party)) & 1;
        if (strategy.outputs[party][choice] < 0) o |= 1 << (2 - party);
      }
      table.p[t][o] += w;
    }
  }
  return table;
}

ProbabilityTable simulate_hybrid_model(const HybridModel& model) {
  double q_total = 0.0;
  for (double q : model.weights) {
    if (q < 0.0) {
      throw std::invalid_argument("simulate_hybrid_model: negative weight");
    }
    q_total += q;
  }
  if (std::abs(q_total - 1.0) > kWeightTol) {
    throw std::invalid_argument(
        "simulate_hybrid_model: partition weights do not sum to 1");
  }

  ProbabilityTable table;
  for (int part = 0; part < 3; ++part) {
    const double q = model.weights[part];
    const StrategyMixture& mixture = model.mixtures[part];
    if (q == 0.0 && mixture.empty()) continue;
    double total = 0.0;
    for (const auto& [w, strategy] : mixture) {
      if (w < 0.0) {
        throw std::invalid_argument(
            "simulate_hybrid_model: negative mixture weight");
      }
      if (strategy.partition != static_cast<Bipartition>(part)) {
        throw std::invalid_argument(
            "simulate_hybrid_model: strategy filed under the wrong "
            "partition");
      }
      check_assignment_entries(strategy.pair_outputs,
                               strategy.singleton_outputs,
                               "simulate_hybrid_model");
      total += w;
    }
    if (std::abs(total - 1.0) > kWeightTol) {
      throw std::invalid_argument(
          "simulate_hybrid_model: strategy mixture does not sum to 1");
    }
    for (const auto& [w, strategy] : mixture) {
      const ProbabilityTable contrib = strategy_probabilities(strategy);
      for (int t = 0; t < 8; ++t) {
        for (int o = 0; o < 8; ++o) table.p[t][o] += q * w * contrib.p[t][o];
      }
    }
  }
  return table;
}

std::vector<CorrelatorTable> svetlichny_polytope_vertices() {
  std::vector<CorrelatorTable> vertices;
  vertices.reserve(192);
  for (int part = 0; part < 3; ++part) {
    for (int pair_bits = 0; pair_bits < 16; ++pair_bits) {
      for (int single_bits = 0; single_bits < 4; ++single_bits) {
        BipartitionStrategy s;
        s.partition = static_cast<Bipartition>(part);
        for (int i = 0; i < 4; ++i) {
          s.pair_outputs[i] = (pair_bits >> i) & 1 ? -1 : +1;
        }
        for (int i = 0; i < 2; ++i) {
          s.singleton_outputs[i] = (single_bits >> i) & 1 ? -1 : +1;
        }
        vertices.push_back(strategy_correlators(s));
      }
    }
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const CorrelatorTable& a, const CorrelatorTable& b) {
              return a.values < b.values;
            });
  vertices.erase(std::unique(vertices.begin(), vertices.end(),
                             [](const CorrelatorTable& a,
                                const CorrelatorTable& b) {
                               return a.values == b.values;
                             }),
                 vertices.end());
  return vertices;
}

MembershipVerdict polytope_membership(const CorrelatorTable& target,
                                      double tolerance) {
  if (!(tolerance >= 1e-12 && tolerance <= 1e-6)) {
    throw std::invalid_argument(
        "polytope_membership: tolerance outside [1e-12, 1e-6]");
  }
  const std::vector<CorrelatorTable> vertices = svetlichny_polytope_vertices();
  const int n = static_cast<int>(vertices.size());

  // Chebyshev program: minimize t subject to
  //   sum_i w_i V_i[k] - t <= target[k]   (slack s+_k)
  //  -sum_i w_i V_i[k] - t <= -target[k]  (slack s-_k)
  //   sum_i w_i = 1, w >= 0, t >= 0.
  // Columns: w_0..w_{n-1}, t, s+_0..7, s-_0..7.
  const int cols = n + 1 + 16;
  std::vector<std::vector<double>> a(17, std::vector<double>(cols, 0.0));
  std::vector<double> b(17, 0.0);
  std::vector<double> c(cols, 0.0);
  c[n] = 1.0;
  for (int k = 0; k < 8; ++k) {
    for (int i = 0; i < n; ++i) {
      a[k][i] = vertices[i].values[k];
      a[8 + k][i] = -vertices[i].values[k];
    }
    a[k][n] = -1.0;
    a[8 + k][n] = -1.0;
    a[k][n + 1 + k] = 1.0;
    a[8 + k][n + 9 + k] = 1.0;
    b[k] = target.values[k];
    b[8 + k] = -target.values[k];
  }
  for (int i = 0; i < n; ++i) a[16][i] = 1.0;
  b[16] = 1.0;

  const lp::Result solved = lp::solve(a, b, c);
  if (solved.status == lp::Status::kIterationLimit) {
    throw SolverError(
        "polytope_membership: simplex iteration cap reached");
  }
  if (solved.status != lp::Status::kOptimal) {
    // The program is feasible and bounded by construction.
    throw SolverError("polytope_membership: unexpected solver status");
  }

  MembershipVerdict verdict;
  verdict.violation_margin = solved.objective;
  verdict.inside = solved.objective <= tolerance;
  if (verdict.inside) {
    verdict.weights.assign(solved.x.begin(), solved.x.begin() + n);
  }
  return verdict;
}

}  // namespace svkit
