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

// Brute-force reference computations for the tests. Everything here builds
// explicit 8x8 Kronecker-product matrices, on purpose: the library itself
// never materializes them, so agreement is a genuine cross-check.

#pragma once

#include <array>
#include <complex>

#include "svkit/quantum.hpp"

namespace svkit::testing {

using Matrix2 = std::array<Complex, 4>;
using Matrix8 = std::array<std::array<Complex, 8>, 8>;

inline Matrix8 kron3(const Matrix2& a, const Matrix2& b, const Matrix2& c) {
  Matrix8 m{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int i1 = (i >> 2) & 1, i2 = (i >> 1) & 1, i3 = i & 1;
      const int j1 = (j >> 2) & 1, j2 = (j >> 1) & 1, j3 = j & 1;
      m[i][j] = a[2 * i1 + j1] * b[2 * i2 + j2] * c[2 * i3 + j3];
    }
  }
  return m;
}

inline Matrix2 bloch_matrix(const Vec3& n) {
  return {Complex(n.z, 0), Complex(n.x, -n.y), Complex(n.x, n.y),
          Complex(-n.z, 0)};
}

inline Complex dense_quadratic_form(const Amplitudes& psi, const Matrix8& m) {
  Complex acc(0, 0);
  for (int i = 0; i < 8; ++i) {
    Complex row(0, 0);
    for (int j = 0; j < 8; ++j) row += m[i][j] * psi[j];
    acc += std::conj(psi[i]) * row;
  }
  return acc;
}

/// <psi| n_a.sigma (x) n_b.sigma (x) n_c.sigma |psi> via the full 8x8 matrix.
inline Complex dense_expectation(const Amplitudes& psi, const Vec3& na,
                                 const Vec3& nb, const Vec3& nc) {
  return dense_quadratic_form(
      psi, kron3(bloch_matrix(na), bloch_matrix(nb), bloch_matrix(nc)));
}

/// Born probability of outcome (a,b,c) via the dense projector product.
inline double dense_outcome_probability(const Amplitudes& psi, const Vec3& na,
                                        const Vec3& nb, const Vec3& nc,
                                        int a, int b, int c) {
  auto projector = [](const Vec3& n, int s) {
    Matrix2 p = bloch_matrix(n);
    for (Complex& v : p) v *= 0.5 * double(s);
    p[0] += 0.5;
    p[3] += 0.5;
    return p;
  };
  const Matrix8 m =
      kron3(projector(na, a), projector(nb, b), projector(nc, c));
  return dense_quadratic_form(psi, m).real();
}

}  // namespace svkit::testing
