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
#include <iosfwd>
#include <string>

#include "svkit/inequalities.hpp"

namespace svkit {

/// A finite measurement run: every one of the eight setting triples is
/// sampled `shots_per_triple` times under the given seed.
struct ShotPlan {
  Scenario scenario;
  std::uint64_t shots_per_triple = 1;
  std::uint64_t seed = 0;
};

/// Outcome counts per setting triple; counts[t] sums to shots_per_triple.
struct SampleRecord {
  ShotPlan plan;
  std::array<std::array<std::uint64_t, 8>, 8> counts{};
};

struct EstimateReport {
  std::array<double, 8> correlator_estimates{};
  /// Plug-in binomial standard error sqrt((1 - E^2)/N) per triple.
  std::array<double, 8> standard_errors{};
  double sv_estimate = 0.0;
  /// Independent triples: the squared per-term errors add.
  double sv_standard_error = 0.0;
  /// (|sv_estimate| - 4) / sv_standard_error.
  double sigma_above_4 = 0.0;
};

/// Draws i.i.d. outcomes from the Born distribution of each setting triple.
/// Triple t uses stream t of the counter-based generator with the shot
/// index as counter, so the record is a pure function of (state, plan) and
/// independent of sampling order.
SampleRecord sample_outcomes(const StateVector& state, const ShotPlan& plan);

/// Frequency estimates with binomial error propagation. Throws
/// std::invalid_argument on a record with zero shots.
EstimateReport estimate(const SampleRecord& record);

/// CSV rows `triple,a_setting,b_setting,c_setting,outcome_a,outcome_b,
/// outcome_c,count`, one per (triple, outcome) with a nonzero count;
/// settings are rendered as their labels.
void write_csv(const SampleRecord& record, std::ostream& out);

std::string to_csv(const SampleRecord& record);

}  // namespace svkit
