/* Copyright 2026 The svkit developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the svkit shared library.
 *
 * Conventions:
 *  - Every fallible function returns an svkit_status; results go to out
 *    parameters, written only on SVKIT_OK.
 *  - Objects behind opaque handles are created by svkit_*_create functions
 *    and released with the matching svkit_*_free.
 *  - svkit_last_error() describes the most recent failure on the calling
 *    thread.
 *
 * Index conventions shared with the outputs:
 *  - Setting triples are indexed 0..7 with party A's choice in bit 2, B's
 *    in bit 1 and C's in bit 0 (0 = unprimed, 1 = primed).
 *  - Outcome triples are indexed 0..7 with a in bit 2, b in bit 1, c in
 *    bit 0 (0 encodes +1, 1 encodes -1).
 *  - Amplitudes are interleaved re,im pairs over the basis |s1 s2 s3> with
 *    qubit 1 in the most significant index bit and 0 encoding spin-up.
 */

#ifndef SVKIT_H
#define SVKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum svkit_status {
  SVKIT_OK = 0,
  SVKIT_ERR_ARGUMENT = 1,    /* invalid input or precondition failure */
  SVKIT_ERR_CONSISTENCY = 2, /* internal numeric consistency check failed */
  SVKIT_ERR_SOLVER = 3,      /* feasibility solver did not converge */
  SVKIT_ERR_IO = 4           /* file output failed */
} svkit_status;

/* Message for the last failure on this thread; empty string if none. */
const char* svkit_last_error(void);

const char* svkit_version(void);

/* ----- states and scenarios ------------------------------------------- */

typedef struct svkit_state svkit_state;
typedef struct svkit_scenario svkit_scenario;

/* Normalizes 8 complex amplitudes given as 16 interleaved re,im doubles. */
svkit_status svkit_state_create(const double amplitudes[16],
                                svkit_state** out);

/* The state (|up up down> - |down down up>)/sqrt(2). */
svkit_status svkit_state_create_ghz(svkit_state** out);

void svkit_state_free(svkit_state* state);

svkit_status svkit_state_amplitudes(const svkit_state* state,
                                    double amplitudes[16]);

/* Scenario from six xy-plane angles (radians from the x axis) in the order
 * a, a', b, b', c, c'. */
svkit_status svkit_scenario_create_planar(const double angles[6],
                                          svkit_scenario** out);

/* Scenario from six Bloch directions (18 doubles, xyz per setting, same
 * order as above). Directions are normalized; labels may be NULL for
 * canonical ones. */
svkit_status svkit_scenario_create_vectors(const double directions[18],
                                           const char* const labels[6],
                                           svkit_scenario** out);

/* The planar scenario attaining the quantum maximum 4*sqrt(2) on the GHZ
 * state: angles 0, -pi/2, pi/4, -pi/4, 0, pi/2. */
svkit_status svkit_scenario_create_optimal(svkit_scenario** out);

void svkit_scenario_free(svkit_scenario* scenario);

svkit_status svkit_scenario_directions(const svkit_scenario* scenario,
                                       double directions[18]);

/* Label of setting `variant` (0 unprimed, 1 primed) of `party` (0..2).
 * Truncates to `size`-1 characters. */
svkit_status svkit_scenario_label(const svkit_scenario* scenario, int party,
                                  int variant, char* buffer, size_t size);

/* ----- inequality evaluation ------------------------------------------ */

/* The eight correlators E(XYZ) in triple-index order. */
svkit_status svkit_correlator_table(const svkit_state* state,
                                    const svkit_scenario* scenario,
                                    double table[8]);

/* Signed/absolute Svetlichny value of a correlator table plus the
 * probability-form value S = (8 - signed)/2. Any output may be NULL. */
svkit_status svkit_eval_svetlichny(const double table[8],
                                   double* signed_value,
                                   double* absolute_value, double* s_form);

/* Full evaluation of (state, scenario): correlator table, signed and
 * absolute Svetlichny values, and the probability-form S recomputed
 * independently from the Born outcome distributions.  Outputs may be NULL. */
svkit_status svkit_evaluate(const svkit_state* state,
                            const svkit_scenario* scenario, double table[8],
                            double* signed_value, double* absolute_value,
                            double* s_from_probabilities);

/* Born probabilities of the eight outcomes for setting triple `triple`. */
svkit_status svkit_outcome_distribution(const svkit_state* state,
                                        const svkit_scenario* scenario,
                                        int triple, double probabilities[8]);

/* Settings-dependent quantum bound 2*sqrt(2+x) + 2*sqrt(2-x) with
 * x = <state| C C' + C' C |state> on party 3, from the two C directions. */
svkit_status svkit_anticommutator_bound(const svkit_state* state,
                                        const double c_direction[3],
                                        const double c_prime_direction[3],
                                        double* bound);

/* ----- optimization over measurement settings ------------------------- */

typedef enum svkit_search_kind {
  SVKIT_SEARCH_FULL_SPHERE = 0,
  SVKIT_SEARCH_PLANAR = 1,
  SVKIT_SEARCH_FIXED_MENU = 2
} svkit_search_kind;

/* Maximizes |Sv| over the requested space. menu_directions (3 doubles per
 * entry) and menu_labels are used only for SVKIT_SEARCH_FIXED_MENU; labels
 * may be NULL. Pass seeds/max_iterations/step_tolerance <= 0 for the
 * defaults (32 restarts, 200 sweeps, 1e-8 rad). Outputs other than
 * best_scenario may be NULL; the scenario must be freed by the caller. */
svkit_status svkit_optimize(const svkit_state* state, svkit_search_kind kind,
                            const double* menu_directions,
                            const char* const* menu_labels, size_t menu_size,
                            int seeds, int max_iterations,
                            double step_tolerance, uint64_t seed,
                            svkit_scenario** best_scenario, double* best_abs,
                            double* best_signed, int* converged);

/* Exhaustive menu audit: best |Sv| over all (m^2)^3 ordered assignments and
 * whether that exceeds the hybrid-model bound 4 (can_certify = 1). */
svkit_status svkit_audit_menu(const svkit_state* state,
                              const double* menu_directions,
                              const char* const* menu_labels,
                              size_t menu_size,
                              svkit_scenario** best_scenario,
                              double* best_abs, int* can_certify,
                              uint64_t* scenarios_evaluated);

/* Optimizes |Sv| over `trials` seeded random pure states; returns the
 * largest value observed. include_ghz_first != 0 pins trial 0 to the GHZ
 * state. */
svkit_status svkit_random_state_scan(int trials, uint64_t seed,
                                     int include_ghz_first, double* max_abs);

/* ----- hybrid-model network and polytope ------------------------------ */

/* Exhausts the 64 deterministic assignments of the correlation network:
 * minimum and maximum number of satisfied bonds and histogram[k] = number
 * of assignments satisfying exactly k of the 8 bonds. */
svkit_status svkit_network_enumerate(int* min_satisfied, int* max_satisfied,
                                     uint64_t histogram[9]);

/* Number of distinct deterministic hybrid-model correlator tables. */
svkit_status svkit_polytope_vertex_count(size_t* count);

/* Writes `count` vertex tables (8 doubles each) into `out`, which must hold
 * capacity doubles >= 8 * vertex count. */
svkit_status svkit_polytope_vertices(double* out, size_t capacity);

/* Convex-hull membership of a correlator table at the given tolerance
 * (within [1e-12, 1e-6]). inside is set to 1/0; margin receives the
 * max-norm distance to the nearest hull point. When inside and weights is
 * non-NULL it receives one convex coefficient per vertex
 * (weights_capacity >= vertex count). */
svkit_status svkit_polytope_membership(const double table[8],
                                       double tolerance, int* inside,
                                       double* margin, double* weights,
                                       size_t weights_capacity);

/* ----- finite-shot sampling ------------------------------------------- */

/* Draws `shots` outcomes per setting triple; counts[8*t + o] receives the
 * count of outcome o under triple t. Deterministic in (state, scenario,
 * shots, seed). */
svkit_status svkit_sample(const svkit_state* state,
                          const svkit_scenario* scenario, uint64_t shots,
                          uint64_t seed, uint64_t counts[64]);

/* Renders the same sample as CSV (header `triple,a_setting,b_setting,
 * c_setting,outcome_a,outcome_b,outcome_c,count`) to `path`. */
svkit_status svkit_sample_csv(const svkit_state* state,
                              const svkit_scenario* scenario, uint64_t shots,
                              uint64_t seed, const char* path);

/* Correlator estimates, binomial standard errors, the Svetlichny estimate
 * with its propagated error, and (|sv| - 4)/error. Outputs may be NULL. */
svkit_status svkit_estimate(const uint64_t counts[64], uint64_t shots,
                            double estimates[8], double standard_errors[8],
                            double* sv_estimate, double* sv_standard_error,
                            double* sigma_above_4);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SVKIT_H */
