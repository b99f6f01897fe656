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

#include "svkit/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "svkit/errors.hpp"
#include "svkit/rng.hpp"

namespace svkit {

namespace {

using std::numbers::pi;

constexpr double kBoundSlack = 1e-9;

// Signed Svetlichny value with partial tensor applications cached per
// party; identical term order to eval_svetlichny.
double signed_sv(const StateVector& state,
                 const std::array<std::array<Observable, 2>, 3>& obs) {
  std::array<Amplitudes, 2> a;
  for (int x = 0; x < 2; ++x) {
    a[x] = apply_to_party(state.amplitudes, obs[0][x], 0);
  }
  std::array<std::array<Amplitudes, 2>, 2> ab;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      ab[x][y] = apply_to_party(a[x], obs[1][y], 1);
    }
  }
  double sum = 0.0;
  for (int t = 0; t < 8; ++t) {
    const Amplitudes abc =
        apply_to_party(ab[(t >> 2) & 1][(t >> 1) & 1], obs[2][t & 1], 2);
    sum += svetlichny_sign(t) * inner_product(state.amplitudes, abc).real();
  }
  return sum;
}

// Angle parametrization of one setting: 1 parameter in the plane, 2 on the
// sphere (polar from +z, then azimuthal from +x). Both are periodic, so
// coordinate searches never need boundary clamping.
Vec3 direction_from_params(SearchKind kind, const double* p) {
  if (kind == SearchKind::kPlanar) {
    return {std::cos(p[0]), std::sin(p[0]), 0.0};
  }
  const double sp = std::sin(p[0]);
  return {sp * std::cos(p[1]), sp * std::sin(p[1]), std::cos(p[0])};
}

// Label-free observable for the search hot path; the direction is unit by
// construction.
Observable observable_from_params(SearchKind kind, const double* p) {
  const Vec3 n = direction_from_params(kind, p);
  Observable o;
  o.matrix[0] = Complex(n.z, 0.0);
  o.matrix[1] = Complex(n.x, -n.y);
  o.matrix[2] = Complex(n.x, n.y);
  o.matrix[3] = Complex(-n.z, 0.0);
  return o;
}

struct ContinuousObjective {
  const StateVector& state;
  SearchKind kind;
  int params_per_setting;
  std::array<std::array<Observable, 2>, 3> obs{};
  std::uint64_t evaluations = 0;

  Scenario scenario(const std::vector<double>& params) const {
    Scenario s;
    for (int i = 0; i < 6; ++i) {
      const double* p = &params[i * params_per_setting];
      s.party_settings[i / 2][i % 2] =
          kind == SearchKind::kPlanar
              ? planar_setting(p[0])
              : setting_from_direction(direction_from_params(kind, p));
    }
    return s;
  }

  void sync(const std::vector<double>& params) {
    for (int i = 0; i < 6; ++i) {
      obs[i / 2][i % 2] =
          observable_from_params(kind, &params[i * params_per_setting]);
    }
  }

  // Evaluates after re-deriving only the observable of `setting`; all other
  // cached observables stay valid.
  double eval(const std::vector<double>& params, int setting) {
    ++evaluations;
    obs[setting / 2][setting % 2] =
        observable_from_params(kind, &params[setting * params_per_setting]);
    return std::abs(signed_sv(state, obs));
  }

  // With every other observable fixed, the signed value is affine in the
  // Bloch vector n of `setting`: Sv(n) = k + u.n. Probing with the zero
  // matrix and the three Pauli matrices recovers (k, u), after which the
  // one-dimensional searches below run on trigonometry alone.
  struct Slice {
    double k;
    Vec3 u;
  };
  Slice slice(int setting) {
    const Observable saved = obs[setting / 2][setting % 2];
    const auto probe = [&](const Observable& o) {
      obs[setting / 2][setting % 2] = o;
      ++evaluations;
      return signed_sv(state, obs);
    };
    const double k = probe(Observable{});
    Observable pauli;
    pauli.matrix = {Complex(0, 0), Complex(1, 0), Complex(1, 0),
                    Complex(0, 0)};
    const double gx = probe(pauli);
    pauli.matrix = {Complex(0, 0), Complex(0, -1), Complex(0, 1),
                    Complex(0, 0)};
    const double gy = probe(pauli);
    pauli.matrix = {Complex(1, 0), Complex(0, 0), Complex(0, 0),
                    Complex(-1, 0)};
    const double gz = probe(pauli);
    obs[setting / 2][setting % 2] = saved;
    return {k, {gx - k, gy - k, gz - k}};
  }
};

// Golden-section ascent over coordinate `coord` on [center-pi, center+pi];
// returns the best coordinate value found. Iterates evaluate the affine
// slice of the objective, which agrees with the full tensor evaluation up
// to rounding.
double golden_section_coordinate(ContinuousObjective& objective,
                                 std::vector<double>& params, int coord,
                                 double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  const int setting = coord / objective.params_per_setting;
  const ContinuousObjective::Slice s = objective.slice(setting);
  const double center = params[coord];
  double lo = center - pi;
  double hi = center + pi;
  auto eval = [&](double x) {
    params[coord] = x;
    const Vec3 n = direction_from_params(
        objective.kind, &params[setting * objective.params_per_setting]);
    return std::abs(s.k + s.u.x * n.x + s.u.y * n.y + s.u.z * n.z);
  };
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = eval(d);
    }
  }
  return fc > fd ? c : d;
}

struct RestartOutcome {
  double value = -1.0;
  std::vector<double> params;
  int sweeps = 0;
  bool converged = false;
};

RestartOutcome run_restart(ContinuousObjective& objective,
                           std::vector<double> params,
                           const SearchSpace& space) {
  RestartOutcome out;
  objective.sync(params);
  double current = std::abs(signed_sv(objective.state, objective.obs));
  ++objective.evaluations;
  for (int sweep = 0; sweep < space.max_iterations; ++sweep) {
    double max_step = 0.0;
    for (int coord = 0; coord < static_cast<int>(params.size()); ++coord) {
      const int setting = coord / objective.params_per_setting;
      const double old = params[coord];
      const double candidate = golden_section_coordinate(
          objective, params, coord, space.step_tolerance);
      params[coord] = candidate;
      const double value = objective.eval(params, setting);
      if (value > current) {
        current = value;
        max_step = std::max(max_step, std::abs(candidate - old));
      } else {
        params[coord] = old;
        objective.eval(params, setting);  // restore the cached observable
      }
    }
    out.sweeps = sweep + 1;
    if (max_step < space.step_tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = current;
  out.params = std::move(params);
  return out;
}

OptimizationResult optimize_continuous(const StateVector& state,
                                       const SearchSpace& space,
                                       std::uint64_t seed) {
  if (space.seeds < 1) {
    throw std::invalid_argument(
        "optimize_settings: continuous spaces need seeds >= 1");
  }
  ContinuousObjective objective{
      state, space.kind, space.kind == SearchKind::kPlanar ? 1 : 2};
  const int num_params = 6 * objective.params_per_setting;

  RestartOutcome best;
  int best_restart = 0;
  bool all_converged = true;
  for (int restart = 0; restart < space.seeds; ++restart) {
    const CounterRng rng(seed, static_cast<std::uint64_t>(restart));
    std::vector<double> params(num_params);
    for (int i = 0; i < num_params; ++i) {
      // Polar coordinates live in [0, pi), the rest in [-pi, pi).
      const bool polar =
          space.kind == SearchKind::kFullSphere && (i % 2 == 0);
      params[i] = polar ? rng.uniform_at(i, 0.0, pi)
                        : rng.uniform_at(i, -pi, pi);
    }
    RestartOutcome outcome = run_restart(objective, std::move(params), space);
    all_converged = all_converged && outcome.converged;
    if (outcome.value > best.value) {
      best = std::move(outcome);
      best_restart = restart;
    }
  }

  OptimizationResult result;
  result.best_scenario = objective.scenario(best.params);
  const SvetlichnyReport report =
      eval_svetlichny(correlator_table(state, result.best_scenario));
  result.signed_value = report.signed_value;
  result.best_value = report.absolute_value;
  result.trace = {best_restart, best.sweeps, objective.evaluations,
                  all_converged};
  return result;
}

OptimizationResult optimize_menu(const StateVector& state,
                                 std::span<const MeasurementSetting> menu) {
  if (menu.empty()) {
    throw std::invalid_argument("optimize_settings: menu must be nonempty");
  }
  const int m = static_cast<int>(menu.size());
  std::vector<Observable> obs;
  obs.reserve(m);
  for (const MeasurementSetting& s : menu) {
    obs.push_back(observable_from_setting(s));
  }

  // Correlator cache over all m^3 setting index triples.
  std::vector<double> e(static_cast<std::size_t>(m) * m * m);
  for (int i = 0; i < m; ++i) {
    const Amplitudes a = apply_to_party(state.amplitudes, obs[i], 0);
    for (int j = 0; j < m; ++j) {
      const Amplitudes ab = apply_to_party(a, obs[j], 1);
      for (int k = 0; k < m; ++k) {
        const Amplitudes abc = apply_to_party(ab, obs[k], 2);
        e[(static_cast<std::size_t>(i) * m + j) * m + k] =
            inner_product(state.amplitudes, abc).real();
      }
    }
  }

  double best_signed = 0.0;
  double best_abs = -1.0;
  std::array<int, 6> best_choice{};
  std::array<int, 6> choice{};  // a, a', b, b', c, c' menu indices
  std::uint64_t count = 0;
  for (choice[0] = 0; choice[0] < m; ++choice[0])
  for (choice[1] = 0; choice[1] < m; ++choice[1])
  for (choice[2] = 0; choice[2] < m; ++choice[2])
  for (choice[3] = 0; choice[3] < m; ++choice[3])
  for (choice[4] = 0; choice[4] < m; ++choice[4])
  for (choice[5] = 0; choice[5] < m; ++choice[5]) {
    ++count;
    double sum = 0.0;
    for (int t = 0; t < 8; ++t) {
      const int i = choice[0 + ((t >> 2) & 1)];
      const int j = choice[2 + ((t >> 1) & 1)];
      const int k = choice[4 + (t & 1)];
      sum += svetlichny_sign(t) *
             e[(static_cast<std::size_t>(i) * m + j) * m + k];
    }
    if (std::abs(sum) > best_abs) {
      best_abs = std::abs(sum);
      best_signed = sum;
      best_choice = choice;
    }
  }

  OptimizationResult result;
  for (int p = 0; p < 3; ++p) {
    for (int v = 0; v < 2; ++v) {
      result.best_scenario.party_settings[p][v] = menu[best_choice[2 * p + v]];
    }
  }
  result.best_value = best_abs;
  result.signed_value = best_signed;
  result.trace = {0, 0, count, true};
  return result;
}

}  // namespace

OptimizationResult optimize_settings(const StateVector& state,
                                     const SearchSpace& space,
                                     std::uint64_t seed) {
  OptimizationResult result =
      space.kind == SearchKind::kFixedMenu
          ? optimize_menu(state, space.menu)
          : optimize_continuous(state, space, seed);
  if (result.best_value > kQuantumBound + kBoundSlack) {
    throw ConsistencyError(
        "optimize_settings: value above the quantum bound");
  }
  return result;
}

OptimalAngleCheck verify_optimal_angles() {
  Scenario scenario;
  scenario.party_settings[0] = {planar_setting(0.0), planar_setting(-pi / 2)};
  scenario.party_settings[1] = {planar_setting(pi / 4),
                                planar_setting(-pi / 4)};
  scenario.party_settings[2] = {planar_setting(0.0), planar_setting(pi / 2)};
  const SvetlichnyReport report =
      eval_svetlichny(correlator_table(ghz_state(), scenario));
  return {scenario, report.absolute_value, report.signed_value};
}

MenuAudit audit_fixed_menu(const StateVector& state,
                           std::span<const MeasurementSetting> menu) {
  if (menu.empty()) {
    throw std::invalid_argument("audit_fixed_menu: menu must be nonempty");
  }
  SearchSpace space;
  space.kind = SearchKind::kFixedMenu;
  space.menu.assign(menu.begin(), menu.end());
  const OptimizationResult result = optimize_settings(state, space);
  MenuAudit audit;
  audit.best_scenario = result.best_scenario;
  audit.best_value = result.best_value;
  audit.signed_value = result.signed_value;
  audit.scenarios_evaluated = result.trace.evaluations;
  audit.can_certify = result.best_value > kClassicalBound + kBoundSlack;
  return audit;
}

StateVector random_state(const CounterRng& rng) {
  Amplitudes amps;
  for (int i = 0; i < 8; ++i) {
    const auto [re, im] = rng.gaussian_pair_at(2 * i);
    amps[i] = Complex(re, im);
  }
  return make_state(amps);
}

ScanResult random_state_scan(int trials, std::uint64_t seed,
                             const StateVector* first_state) {
  if (trials < 1) {
    throw std::invalid_argument("random_state_scan: trials must be >= 1");
  }
  SearchSpace space;
  space.kind = SearchKind::kFullSphere;
  space.seeds = 6;
  space.max_iterations = 50;
  space.step_tolerance = 1e-7;

  ScanResult result;
  result.trials.reserve(trials);
  for (int trial = 0; trial < trials; ++trial) {
    const CounterRng rng(seed, static_cast<std::uint64_t>(trial));
    const StateVector state = (trial == 0 && first_state != nullptr)
                                  ? *first_state
                                  : random_state(rng);
    // Counter 16 is reserved for the per-trial optimizer sub-seed
    // (counters 0..15 feed the state's Gaussian draws).
    const OptimizationResult opt =
        optimize_settings(state, space, rng.bits_at(16));

    ScanTrial entry;
    entry.best_abs = opt.best_value;
    entry.schwarz_bound = anticommutator_bound(
        state,
        observable_from_setting(opt.best_scenario.party_settings[2][0]),
        observable_from_setting(opt.best_scenario.party_settings[2][1]));
    result.trials.push_back(entry);
    result.max_abs = std::max(result.max_abs, entry.best_abs);
  }
  return result;
}

}  // namespace svkit
