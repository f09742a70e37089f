// Copyright 2026 The su2fac Authors
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

// Reference computations for the tests. Everything here is deliberately
// naive and shares no code path with the library beyond the Mat2 container.

#include <array>
#include <cmath>
#include <complex>

#include "su2fac/su2.hpp"

namespace oracle {

using su2fac::Complex;
using su2fac::Mat2;

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 out = Mat2::zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

inline Mat2 adjoint(const Mat2& a) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

/// i(x σx + y σy + z σz) assembled from the Pauli matrices term by term.
inline Mat2 algebra_element(double x, double y, double z) {
  const Complex i(0.0, 1.0);
  const Mat2 sx{0.0, 1.0, 1.0, 0.0};
  const Mat2 sy{0.0, -i, i, 0.0};
  const Mat2 sz{1.0, 0.0, 0.0, -1.0};
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out(r, c) = i * (x * sx(r, c) + y * sy(r, c) + z * sz(r, c));
  return out;
}

/// Truncated power series Σ_{k<terms} M^k / k!.
inline Mat2 taylor_expm(const Mat2& m, int terms = 25) {
  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k < terms; ++k) {
    term = mul(term, m);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) term(r, c) /= static_cast<double>(k);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) sum(r, c) += term(r, c);
  }
  return sum;
}

inline double entrywise_frobenius(const Mat2& a, const Mat2& b) {
  double s = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      const Complex d = a(r, c) - b(r, c);
      s += d.real() * d.real() + d.imag() * d.imag();
    }
  return std::sqrt(s);
}

/// Coordinates of a traceless skew-Hermitian matrix via the trace inner
/// product with each basis element: v_j = Tr(M (iσ_j)†) / 2.
inline std::array<double, 3> coordinates(const Mat2& m) {
  std::array<double, 3> v{};
  const Mat2 basis[3] = {algebra_element(1, 0, 0), algebra_element(0, 1, 0),
                         algebra_element(0, 0, 1)};
  for (int j = 0; j < 3; ++j) {
    const Mat2 p = mul(m, adjoint(basis[j]));
    v[j] = 0.5 * (p(0, 0) + p(1, 1)).real();
  }
  return v;
}

/// R(V) by conjugating each basis element and reading the coordinates.
inline std::array<std::array<double, 3>, 3> conjugation_rotation(
    const Mat2& v) {
  std::array<std::array<double, 3>, 3> r{};
  for (int j = 0; j < 3; ++j) {
    const Mat2 e = algebra_element(j == 0, j == 1, j == 2);
    const auto col = coordinates(mul(mul(v, e), adjoint(v)));
    for (int i = 0; i < 3; ++i) r[i][j] = col[i];
  }
  return r;
}

}  // namespace oracle
