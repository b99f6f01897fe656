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
#include <complex>
#include <string>

namespace svkit {

using Complex = std::complex<double>;

inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;

/// Amplitudes over the three-qubit computational basis |s1 s2 s3>. Qubit 1
/// is the most significant bit of the index; bit value 0 encodes spin-up,
/// 1 spin-down. |up up down> sits at index 0b001, |down down up> at 0b110.
using Amplitudes = std::array<Complex, 8>;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);

/// Normalized pure state of three qubits.
struct StateVector {
  Amplitudes amplitudes{};
};

/// Unit Bloch direction defining the two-outcome spin observable n.sigma,
/// plus a free-form text tag used when rendering results.
struct MeasurementSetting {
  Vec3 direction;
  std::string label;
};

/// 2x2 complex Hermitian matrix squaring to the identity, stored row-major.
struct Observable {
  std::array<Complex, 4> matrix{};
};

/// Two settings per party. party_settings[p][0] is the unprimed choice,
/// party_settings[p][1] the primed one. The two may coincide.
struct Scenario {
  std::array<std::array<MeasurementSetting, 2>, 3> party_settings;
};

/// Born probabilities over the eight outcome triples (a,b,c), a,b,c = +-1.
/// Outcome index: bit 2 holds a, bit 1 holds b, bit 0 holds c, with bit
/// value 0 for +1 and 1 for -1.
struct OutcomeDistribution {
  std::array<double, 8> probabilities{};
};

/// Product a*b*c of the outcomes encoded by outcome index `o`.
constexpr int outcome_product(int o) {
  int bits = (o & 1) + ((o >> 1) & 1) + ((o >> 2) & 1);
  return (bits & 1) ? -1 : +1;
}

/// Normalizes the given amplitudes to unit norm. Throws std::invalid_argument
/// on an all-zero input.
StateVector make_state(const Amplitudes& amplitudes);

/// The three-qubit state (|up up down> - |down down up>)/sqrt(2).
StateVector ghz_state();

/// Spin measurement in the xy plane at `angle` radians from the x axis:
/// direction (cos angle, sin angle, 0). Its eigenvectors are
/// (|up> +- e^{i angle} |down>)/sqrt(2).
MeasurementSetting planar_setting(double angle);

/// Setting along an arbitrary direction, normalized to unit length. Throws
/// std::invalid_argument if the direction has zero norm. An empty label is
/// replaced by a canonical one derived from the components.
MeasurementSetting setting_from_direction(const Vec3& direction,
                                          std::string label = {});

/// The matrix nx*sigma_x + ny*sigma_y + nz*sigma_z. Throws
/// std::invalid_argument unless the direction is unit length within 1e-12.
Observable observable_from_setting(const MeasurementSetting& setting);

/// <state| a (x) b (x) c |state>. The raw inner product must be real to
/// within 1e-10 or a ConsistencyError is thrown.
double tensor_expectation(const StateVector& state, const Observable& a,
                          const Observable& b, const Observable& c);

/// Born probabilities for one fixed setting triple, computed from the
/// projector product (I + outcome * n.sigma)/2 per party.
OutcomeDistribution outcome_distribution(
    const StateVector& state, const std::array<MeasurementSetting, 3>& triple);

// Low-level helpers shared by the inequality evaluators.

/// Applies a single-qubit operator to `party` (0, 1 or 2) of a three-qubit
/// amplitude vector.
Amplitudes apply_to_party(const Amplitudes& amplitudes, const Observable& op,
                          int party);

/// <bra|ket> over the 8-dimensional amplitude space.
Complex inner_product(const Amplitudes& bra, const Amplitudes& ket);

}  // namespace svkit
