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

#include <cstdint>
#include <span>
#include <vector>

#include "svkit/inequalities.hpp"
#include "svkit/rng.hpp"

namespace svkit {

/// Haar-like random pure state: 8 independent standard complex Gaussian
/// amplitudes from the counter-based generator (counters 0..15), normalized.
StateVector random_state(const CounterRng& rng);

enum class SearchKind { kFullSphere, kPlanar, kFixedMenu };

/// Where and how to search for settings maximizing |Sv|. Continuous spaces
/// run multi-start coordinate-wise golden-section ascent over angle
/// parameters (polar and azimuthal per setting on the full sphere, the
/// single angle from the x axis in the plane); a fixed menu is enumerated
/// exhaustively over all (m^2)^3 ordered setting-pair assignments.
struct SearchSpace {
  SearchKind kind = SearchKind::kPlanar;
  std::vector<MeasurementSetting> menu;  // kFixedMenu only
  int seeds = 32;                        // random restarts
  int max_iterations = 200;              // coordinate sweeps per restart
  double step_tolerance = 1e-8;          // radians
};

struct OptimizationTrace {
  int best_restart = 0;       // restart index achieving the optimum
  int iterations = 0;         // sweeps used by that restart
  std::uint64_t evaluations = 0;
  bool converged = true;      // false if any restart hit max_iterations
};

struct OptimizationResult {
  Scenario best_scenario;
  double best_value = 0.0;    // |Sv|
  double signed_value = 0.0;
  OptimizationTrace trace;
};

/// Maximizes |Sv| for `state` over `space`. Deterministic in
/// (state, space, seed): restart starting points are pre-assigned from the
/// seed, so any execution schedule returns the same result.
OptimizationResult optimize_settings(const StateVector& state,
                                     const SearchSpace& space,
                                     std::uint64_t seed = 0);

struct OptimalAngleCheck {
  Scenario scenario;
  double absolute_value = 0.0;
  double signed_value = 0.0;
};

/// Builds the known maximal-violation planar scenario (angles 0, -pi/2 for
/// A; pi/4, -pi/4 for B; 0, pi/2 for C), evaluates it on the GHZ state and
/// returns the resulting value; |Sv| equals 4*sqrt(2) to machine precision.
OptimalAngleCheck verify_optimal_angles();

struct MenuAudit {
  Scenario best_scenario;
  double best_value = 0.0;
  double signed_value = 0.0;
  /// True iff some menu assignment exceeds the hybrid-model bound 4, i.e.
  /// the menu can certify genuine three-particle nonlocality on this state.
  bool can_certify = false;
  std::uint64_t scenarios_evaluated = 0;
};

/// Exhaustively audits a measurement menu: can any assignment of ordered
/// setting pairs (repetition allowed) violate |Sv| <= 4 on `state`?
MenuAudit audit_fixed_menu(const StateVector& state,
                           std::span<const MeasurementSetting> menu);

struct ScanTrial {
  double best_abs = 0.0;      // optimized |Sv| for this state
  double schwarz_bound = 0.0; // anticommutator bound of the best scenario
};

struct ScanResult {
  double max_abs = 0.0;
  std::vector<ScanTrial> trials;
};

/// Optimizes |Sv| over `trials` random pure states (8 seeded standard
/// complex Gaussian amplitudes, normalized). When `first_state` is given it
/// replaces the state of trial 0, so a known state can anchor the scan.
ScanResult random_state_scan(int trials, std::uint64_t seed,
                             const StateVector* first_state = nullptr);

}  // namespace svkit
