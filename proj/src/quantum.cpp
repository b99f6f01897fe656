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

#include "svkit/quantum.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "svkit/errors.hpp"

namespace svkit {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kImagTol = 1e-10;

std::string format_component(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

StateVector make_state(const Amplitudes& amplitudes) {
  double norm_sq = 0.0;
  for (const Complex& a : amplitudes) norm_sq += std::norm(a);
  if (norm_sq == 0.0) {
    throw std::invalid_argument("make_state: amplitude vector has zero norm");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  StateVector state;
  for (int i = 0; i < 8; ++i) state.amplitudes[i] = amplitudes[i] * inv;
  return state;
}

StateVector ghz_state() {
  StateVector state;
  state.amplitudes[0b001] = Complex(1.0 / kSqrt2, 0.0);
  state.amplitudes[0b110] = Complex(-1.0 / kSqrt2, 0.0);
  return state;
}

MeasurementSetting planar_setting(double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("planar_setting: angle must be finite");
  }
  MeasurementSetting s;
  s.direction = Vec3{std::cos(angle), std::sin(angle), 0.0};
  s.label = "xy(" + format_component(angle) + ")";
  return s;
}

MeasurementSetting setting_from_direction(const Vec3& direction,
                                          std::string label) {
  const double n = norm(direction);
  if (n == 0.0) {
    throw std::invalid_argument(
        "setting_from_direction: direction has zero norm");
  }
  MeasurementSetting s;
  s.direction = Vec3{direction.x / n, direction.y / n, direction.z / n};
  if (label.empty()) {
    label = "n(" + format_component(s.direction.x) + "," +
            format_component(s.direction.y) + "," +
            format_component(s.direction.z) + ")";
  }
  s.label = std::move(label);
  return s;
}

Observable observable_from_setting(const MeasurementSetting& setting) {
  const Vec3& n = setting.direction;
  if (std::abs(norm(n) - 1.0) > kUnitTol) {
    throw std::invalid_argument(
        "observable_from_setting: direction is not unit length");
  }
  Observable o;
  o.matrix[0] = Complex(n.z, 0.0);
  o.matrix[1] = Complex(n.x, -n.y);
  o.matrix[2] = Complex(n.x, n.y);
  o.matrix[3] = Complex(-n.z, 0.0);
  return o;
}

Amplitudes apply_to_party(const Amplitudes& amplitudes, const Observable& op,
                          int party) {
  // Party 0 occupies the most significant index bit.
  const int bit = 2 - party;
  const int mask = 1 << bit;
  Amplitudes out;
  for (int i = 0; i < 8; ++i) {
    const int lo = i & ~mask;
    const int hi = i | mask;
    const int row = (i >> bit) & 1;
    out[i] = op.matrix[2 * row + 0] * amplitudes[lo] +
             op.matrix[2 * row + 1] * amplitudes[hi];
  }
  return out;
}

Complex inner_product(const Amplitudes& bra, const Amplitudes& ket) {
  Complex acc(0.0, 0.0);
  for (int i = 0; i < 8; ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double tensor_expectation(const StateVector& state, const Observable& a,
                          const Observable& b, const Observable& c) {
  Amplitudes phi = apply_to_party(state.amplitudes, a, 0);
  phi = apply_to_party(phi, b, 1);
  phi = apply_to_party(phi, c, 2);
  const Complex value = inner_product(state.amplitudes, phi);
  if (std::abs(value.imag()) > kImagTol) {
    throw ConsistencyError(
        "tensor_expectation: imaginary residue above tolerance");
  }
  return value.real();
}

OutcomeDistribution outcome_distribution(
    const StateVector& state,
    const std::array<MeasurementSetting, 3>& triple) {
  std::array<Observable, 3> obs = {observable_from_setting(triple[0]),
                                   observable_from_setting(triple[1]),
                                   observable_from_setting(triple[2])};
  // Projector (I + s * n.sigma)/2 for outcome s on one party.
  auto projector = [](const Observable& o, int s) {
    Observable p;
    p.matrix[0] = 0.5 * (Complex(1.0, 0.0) + double(s) * o.matrix[0]);
    p.matrix[1] = 0.5 * (double(s) * o.matrix[1]);
    p.matrix[2] = 0.5 * (double(s) * o.matrix[2]);
    p.matrix[3] = 0.5 * (Complex(1.0, 0.0) + double(s) * o.matrix[3]);
    return p;
  };
  OutcomeDistribution dist;
  for (int o = 0; o < 8; ++o) {
    Amplitudes proj = state.amplitudes;
    for (int party = 0; party < 3; ++party) {
      const int s = ((o >> (2 - party)) & 1) ? -1 : +1;
      proj = apply_to_party(proj, projector(obs[party], s), party);
    }
    // Squared norm of the projected state; nonnegative by construction.
    double p = 0.0;
    for (const Complex& a : proj) p += std::norm(a);
    dist.probabilities[o] = p;
  }
  return dist;
}

}  // namespace svkit
