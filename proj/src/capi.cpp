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

#include "svkit.h"

#include <cstring>
#include <fstream>
#include <new>
#include <numbers>
#include <stdexcept>
#include <string>

#include "svkit/errors.hpp"
#include "svkit/hidden_models.hpp"
#include "svkit/inequalities.hpp"
#include "svkit/optimizer.hpp"
#include "svkit/quantum.hpp"
#include "svkit/sampler.hpp"

struct svkit_state {
  svkit::StateVector value;
};

struct svkit_scenario {
  svkit::Scenario value;
};

namespace {

thread_local std::string g_last_error;

svkit_status fail(svkit_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs `body`, translating exceptions to status codes.
template <typename F>
svkit_status guarded(F&& body) {
  try {
    body();
    return SVKIT_OK;
  } catch (const std::invalid_argument& e) {
    return fail(SVKIT_ERR_ARGUMENT, e.what());
  } catch (const svkit::SolverError& e) {
    return fail(SVKIT_ERR_SOLVER, e.what());
  } catch (const svkit::ConsistencyError& e) {
    return fail(SVKIT_ERR_CONSISTENCY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SVKIT_ERR_ARGUMENT, "out of memory");
  } catch (const std::exception& e) {
    return fail(SVKIT_ERR_CONSISTENCY, e.what());
  }
}

svkit_status require(bool ok, const char* message) {
  return ok ? SVKIT_OK : fail(SVKIT_ERR_ARGUMENT, message);
}

svkit::Scenario scenario_from_vectors(const double directions[18],
                                      const char* const labels[6]) {
  svkit::Scenario s;
  for (int i = 0; i < 6; ++i) {
    const svkit::Vec3 dir{directions[3 * i], directions[3 * i + 1],
                          directions[3 * i + 2]};
    std::string label;
    if (labels != nullptr && labels[i] != nullptr) label = labels[i];
    s.party_settings[i / 2][i % 2] =
        svkit::setting_from_direction(dir, std::move(label));
  }
  return s;
}

std::vector<svkit::MeasurementSetting> menu_from_arrays(
    const double* directions, const char* const* labels, size_t size) {
  if (directions == nullptr || size == 0) {
    throw std::invalid_argument("menu must be nonempty");
  }
  std::vector<svkit::MeasurementSetting> menu;
  menu.reserve(size);
  for (size_t i = 0; i < size; ++i) {
    const svkit::Vec3 dir{directions[3 * i], directions[3 * i + 1],
                          directions[3 * i + 2]};
    std::string label;
    if (labels != nullptr && labels[i] != nullptr) label = labels[i];
    menu.push_back(svkit::setting_from_direction(dir, std::move(label)));
  }
  return menu;
}

}  // namespace

extern "C" {

const char* svkit_last_error(void) { return g_last_error.c_str(); }

const char* svkit_version(void) { return "0.1.0"; }

svkit_status svkit_state_create(const double amplitudes[16],
                                svkit_state** out) {
  if (svkit_status s = require(amplitudes && out, "null argument")) return s;
  return guarded([&] {
    svkit::Amplitudes amps;
    for (int i = 0; i < 8; ++i) {
      amps[i] = svkit::Complex(amplitudes[2 * i], amplitudes[2 * i + 1]);
    }
    *out = new svkit_state{svkit::make_state(amps)};
  });
}

svkit_status svkit_state_create_ghz(svkit_state** out) {
  if (svkit_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = new svkit_state{svkit::ghz_state()}; });
}

void svkit_state_free(svkit_state* state) { delete state; }

svkit_status svkit_state_amplitudes(const svkit_state* state,
                                    double amplitudes[16]) {
  if (svkit_status s = require(state && amplitudes, "null argument")) return s;
  for (int i = 0; i < 8; ++i) {
    amplitudes[2 * i] = state->value.amplitudes[i].real();
    amplitudes[2 * i + 1] = state->value.amplitudes[i].imag();
  }
  return SVKIT_OK;
}

svkit_status svkit_scenario_create_planar(const double angles[6],
                                          svkit_scenario** out) {
  if (svkit_status s = require(angles && out, "null argument")) return s;
  return guarded([&] {
    svkit::Scenario scen;
    for (int i = 0; i < 6; ++i) {
      scen.party_settings[i / 2][i % 2] = svkit::planar_setting(angles[i]);
    }
    *out = new svkit_scenario{std::move(scen)};
  });
}

svkit_status svkit_scenario_create_vectors(const double directions[18],
                                           const char* const labels[6],
                                           svkit_scenario** out) {
  if (svkit_status s = require(directions && out, "null argument")) return s;
  return guarded(
      [&] { *out = new svkit_scenario{scenario_from_vectors(directions, labels)}; });
}

svkit_status svkit_scenario_create_optimal(svkit_scenario** out) {
  if (svkit_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = new svkit_scenario{svkit::verify_optimal_angles().scenario};
  });
}

void svkit_scenario_free(svkit_scenario* scenario) { delete scenario; }

svkit_status svkit_scenario_directions(const svkit_scenario* scenario,
                                       double directions[18]) {
  if (svkit_status s = require(scenario && directions, "null argument")) {
    return s;
  }
  for (int i = 0; i < 6; ++i) {
    const svkit::Vec3& d =
        scenario->value.party_settings[i / 2][i % 2].direction;
    directions[3 * i] = d.x;
    directions[3 * i + 1] = d.y;
    directions[3 * i + 2] = d.z;
  }
  return SVKIT_OK;
}

svkit_status svkit_scenario_label(const svkit_scenario* scenario, int party,
                                  int variant, char* buffer, size_t size) {
  if (svkit_status s = require(scenario && buffer && size > 0 && party >= 0 &&
                                   party < 3 && variant >= 0 && variant < 2,
                               "bad label query")) {
    return s;
  }
  const std::string& label =
      scenario->value.party_settings[party][variant].label;
  std::strncpy(buffer, label.c_str(), size - 1);
  buffer[size - 1] = '\0';
  return SVKIT_OK;
}

svkit_status svkit_correlator_table(const svkit_state* state,
                                    const svkit_scenario* scenario,
                                    double table[8]) {
  if (svkit_status s = require(state && scenario && table, "null argument")) {
    return s;
  }
  return guarded([&] {
    const svkit::CorrelatorTable t =
        svkit::correlator_table(state->value, scenario->value);
    for (int i = 0; i < 8; ++i) table[i] = t.values[i];
  });
}

svkit_status svkit_eval_svetlichny(const double table[8],
                                   double* signed_value,
                                   double* absolute_value, double* s_form) {
  if (svkit_status s = require(table != nullptr, "null argument")) return s;
  return guarded([&] {
    svkit::CorrelatorTable t;
    for (int i = 0; i < 8; ++i) t.values[i] = table[i];
    const svkit::SvetlichnyReport report = svkit::eval_svetlichny(t);
    if (signed_value) *signed_value = report.signed_value;
    if (absolute_value) *absolute_value = report.absolute_value;
    if (s_form) *s_form = report.s_probability_form;
  });
}

svkit_status svkit_evaluate(const svkit_state* state,
                            const svkit_scenario* scenario, double table[8],
                            double* signed_value, double* absolute_value,
                            double* s_from_probabilities) {
  if (svkit_status s = require(state && scenario, "null argument")) return s;
  return guarded([&] {
    const svkit::CorrelatorTable t =
        svkit::correlator_table(state->value, scenario->value);
    const svkit::SvetlichnyReport report = svkit::eval_svetlichny(t);
    if (table) {
      for (int i = 0; i < 8; ++i) table[i] = t.values[i];
    }
    if (signed_value) *signed_value = report.signed_value;
    if (absolute_value) *absolute_value = report.absolute_value;
    if (s_from_probabilities) {
      std::array<svkit::CorrelationStats, 8> stats;
      for (int tr = 0; tr < 8; ++tr) {
        const std::array<svkit::MeasurementSetting, 3> triple = {
            scenario->value.party_settings[0][(tr >> 2) & 1],
            scenario->value.party_settings[1][(tr >> 1) & 1],
            scenario->value.party_settings[2][tr & 1]};
        stats[tr] = svkit::correlation_stats(
            svkit::outcome_distribution(state->value, triple));
      }
      *s_from_probabilities = svkit::eval_s_probability_form(stats);
    }
  });
}

svkit_status svkit_outcome_distribution(const svkit_state* state,
                                        const svkit_scenario* scenario,
                                        int triple, double probabilities[8]) {
  if (svkit_status s = require(state && scenario && probabilities &&
                                   triple >= 0 && triple < 8,
                               "bad distribution query")) {
    return s;
  }
  return guarded([&] {
    const std::array<svkit::MeasurementSetting, 3> settings = {
        scenario->value.party_settings[0][(triple >> 2) & 1],
        scenario->value.party_settings[1][(triple >> 1) & 1],
        scenario->value.party_settings[2][triple & 1]};
    const svkit::OutcomeDistribution dist =
        svkit::outcome_distribution(state->value, settings);
    for (int o = 0; o < 8; ++o) probabilities[o] = dist.probabilities[o];
  });
}

svkit_status svkit_anticommutator_bound(const svkit_state* state,
                                        const double c_direction[3],
                                        const double c_prime_direction[3],
                                        double* bound) {
  if (svkit_status s = require(state && c_direction && c_prime_direction &&
                                   bound,
                               "null argument")) {
    return s;
  }
  return guarded([&] {
    const svkit::Observable c =
        svkit::observable_from_setting(svkit::setting_from_direction(
            {c_direction[0], c_direction[1], c_direction[2]}));
    const svkit::Observable cp =
        svkit::observable_from_setting(svkit::setting_from_direction(
            {c_prime_direction[0], c_prime_direction[1],
             c_prime_direction[2]}));
    *bound = svkit::anticommutator_bound(state->value, c, cp);
  });
}

svkit_status svkit_optimize(const svkit_state* state, svkit_search_kind kind,
                            const double* menu_directions,
                            const char* const* menu_labels, size_t menu_size,
                            int seeds, int max_iterations,
                            double step_tolerance, uint64_t seed,
                            svkit_scenario** best_scenario, double* best_abs,
                            double* best_signed, int* converged) {
  if (svkit_status s = require(state != nullptr, "null state")) return s;
  return guarded([&] {
    svkit::SearchSpace space;
    switch (kind) {
      case SVKIT_SEARCH_FULL_SPHERE:
        space.kind = svkit::SearchKind::kFullSphere;
        break;
      case SVKIT_SEARCH_PLANAR:
        space.kind = svkit::SearchKind::kPlanar;
        break;
      case SVKIT_SEARCH_FIXED_MENU:
        space.kind = svkit::SearchKind::kFixedMenu;
        space.menu = menu_from_arrays(menu_directions, menu_labels, menu_size);
        break;
      default:
        throw std::invalid_argument("unknown search kind");
    }
    if (seeds > 0) space.seeds = seeds;
    if (max_iterations > 0) space.max_iterations = max_iterations;
    if (step_tolerance > 0) space.step_tolerance = step_tolerance;

    const svkit::OptimizationResult result =
        svkit::optimize_settings(state->value, space, seed);
    if (best_scenario) {
      *best_scenario = new svkit_scenario{result.best_scenario};
    }
    if (best_abs) *best_abs = result.best_value;
    if (best_signed) *best_signed = result.signed_value;
    if (converged) *converged = result.trace.converged ? 1 : 0;
  });
}

svkit_status svkit_audit_menu(const svkit_state* state,
                              const double* menu_directions,
                              const char* const* menu_labels,
                              size_t menu_size,
                              svkit_scenario** best_scenario,
                              double* best_abs, int* can_certify,
                              uint64_t* scenarios_evaluated) {
  if (svkit_status s = require(state != nullptr, "null state")) return s;
  return guarded([&] {
    const std::vector<svkit::MeasurementSetting> menu =
        menu_from_arrays(menu_directions, menu_labels, menu_size);
    const svkit::MenuAudit audit =
        svkit::audit_fixed_menu(state->value, menu);
    if (best_scenario) {
      *best_scenario = new svkit_scenario{audit.best_scenario};
    }
    if (best_abs) *best_abs = audit.best_value;
    if (can_certify) *can_certify = audit.can_certify ? 1 : 0;
    if (scenarios_evaluated) *scenarios_evaluated = audit.scenarios_evaluated;
  });
}

svkit_status svkit_random_state_scan(int trials, uint64_t seed,
                                     int include_ghz_first, double* max_abs) {
  if (svkit_status s = require(max_abs != nullptr, "null argument")) return s;
  return guarded([&] {
    const svkit::StateVector ghz = svkit::ghz_state();
    const svkit::ScanResult result = svkit::random_state_scan(
        trials, seed, include_ghz_first ? &ghz : nullptr);
    *max_abs = result.max_abs;
  });
}

svkit_status svkit_network_enumerate(int* min_satisfied, int* max_satisfied,
                                     uint64_t histogram[9]) {
  return guarded([&] {
    const svkit::NetworkSummary summary =
        svkit::enumerate_network_assignments();
    if (min_satisfied) *min_satisfied = summary.min_satisfied;
    if (max_satisfied) *max_satisfied = summary.max_satisfied;
    if (histogram) {
      for (int i = 0; i < 9; ++i) {
        histogram[i] = static_cast<uint64_t>(summary.histogram[i]);
      }
    }
  });
}

svkit_status svkit_polytope_vertex_count(size_t* count) {
  if (svkit_status s = require(count != nullptr, "null argument")) return s;
  return guarded(
      [&] { *count = svkit::svetlichny_polytope_vertices().size(); });
}

svkit_status svkit_polytope_vertices(double* out, size_t capacity) {
  if (svkit_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    const std::vector<svkit::CorrelatorTable> vertices =
        svkit::svetlichny_polytope_vertices();
    if (capacity < vertices.size() * 8) {
      throw std::invalid_argument("vertex buffer too small");
    }
    for (size_t i = 0; i < vertices.size(); ++i) {
      for (int k = 0; k < 8; ++k) out[8 * i + k] = vertices[i].values[k];
    }
  });
}

svkit_status svkit_polytope_membership(const double table[8],
                                       double tolerance, int* inside,
                                       double* margin, double* weights,
                                       size_t weights_capacity) {
  if (svkit_status s = require(table && inside, "null argument")) return s;
  return guarded([&] {
    svkit::CorrelatorTable target;
    for (int i = 0; i < 8; ++i) target.values[i] = table[i];
    const svkit::MembershipVerdict verdict =
        svkit::polytope_membership(target, tolerance);
    if (verdict.inside && weights != nullptr) {
      if (weights_capacity < verdict.weights.size()) {
        throw std::invalid_argument("weights buffer too small");
      }
      for (size_t i = 0; i < verdict.weights.size(); ++i) {
        weights[i] = verdict.weights[i];
      }
    }
    *inside = verdict.inside ? 1 : 0;
    if (margin) *margin = verdict.violation_margin;
  });
}

svkit_status svkit_sample(const svkit_state* state,
                          const svkit_scenario* scenario, uint64_t shots,
                          uint64_t seed, uint64_t counts[64]) {
  if (svkit_status s = require(state && scenario && counts, "null argument")) {
    return s;
  }
  return guarded([&] {
    const svkit::SampleRecord record = svkit::sample_outcomes(
        state->value, {scenario->value, shots, seed});
    for (int t = 0; t < 8; ++t) {
      for (int o = 0; o < 8; ++o) counts[8 * t + o] = record.counts[t][o];
    }
  });
}

svkit_status svkit_sample_csv(const svkit_state* state,
                              const svkit_scenario* scenario, uint64_t shots,
                              uint64_t seed, const char* path) {
  if (svkit_status s = require(state && scenario && path, "null argument")) {
    return s;
  }
  std::string csv;
  const svkit_status status = guarded([&] {
    csv = svkit::to_csv(svkit::sample_outcomes(
        state->value, {scenario->value, shots, seed}));
  });
  if (status != SVKIT_OK) return status;
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail(SVKIT_ERR_IO, "cannot open output file");
  out << csv;
  out.flush();
  if (!out) return fail(SVKIT_ERR_IO, "write failed");
  return SVKIT_OK;
}

svkit_status svkit_estimate(const uint64_t counts[64], uint64_t shots,
                            double estimates[8], double standard_errors[8],
                            double* sv_estimate, double* sv_standard_error,
                            double* sigma_above_4) {
  if (svkit_status s = require(counts != nullptr, "null argument")) return s;
  return guarded([&] {
    svkit::SampleRecord record;
    record.plan.shots_per_triple = shots;
    for (int t = 0; t < 8; ++t) {
      for (int o = 0; o < 8; ++o) record.counts[t][o] = counts[8 * t + o];
    }
    const svkit::EstimateReport report = svkit::estimate(record);
    if (estimates) {
      for (int t = 0; t < 8; ++t) estimates[t] = report.correlator_estimates[t];
    }
    if (standard_errors) {
      for (int t = 0; t < 8; ++t) standard_errors[t] = report.standard_errors[t];
    }
    if (sv_estimate) *sv_estimate = report.sv_estimate;
    if (sv_standard_error) *sv_standard_error = report.sv_standard_error;
    if (sigma_above_4) *sigma_above_4 = report.sigma_above_4;
  });
}

}  // extern "C"
