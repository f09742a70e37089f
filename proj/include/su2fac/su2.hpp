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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace su2fac {

using Complex = std::complex<double>;

/// Real coordinates (x, y, z) of the su(2) element i(x σx + y σy + z σz).
///
/// This is the single place the Pauli convention is fixed:
///   σx = [[0, 1], [1, 0]],  σy = [[0, -i], [i, 0]],  σz = [[1, 0], [0, -1]]
/// and the algebra element for v is M(v) = i(v·σ). Everything else in the
/// library (adjoint rotations, lifts, frames) derives its signs from here.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }

inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Dense 2x2 complex matrix, row-major.
class Mat2 {
 public:
  constexpr Mat2() = default;
  constexpr Mat2(Complex m00, Complex m01, Complex m10, Complex m11)
      : m_{m00, m01, m10, m11} {}

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 zero() { return {}; }

  constexpr Complex& operator()(int r, int c) { return m_[2 * r + c]; }
  constexpr const Complex& operator()(int r, int c) const {
    return m_[2 * r + c];
  }

  Mat2 dagger() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
            std::conj(m_[3])};
  }
  Complex trace() const { return m_[0] + m_[3]; }
  Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2],
            a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
            a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2],
            a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2],
            a.m_[3] + b.m_[3]};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2],
            a.m_[3] - b.m_[3]};
  }
  friend Mat2 operator-(const Mat2& a) {
    return {-a.m_[0], -a.m_[1], -a.m_[2], -a.m_[3]};
  }
  friend Mat2 operator*(Complex s, const Mat2& a) {
    return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  std::array<Complex, 4> m_{};
};

/// Element of su(2): skew-Hermitian and traceless. Not enforced by the type;
/// see is_su2_algebra().
using SkewMatrix = Mat2;
/// Element of SU(2): unitary with unit determinant. Not enforced by the
/// type; see is_su2().
using UnitaryGate = Mat2;

inline constexpr double kAlgebraTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-12;

namespace pauli {
inline constexpr Mat2 x() { return {0.0, 1.0, 1.0, 0.0}; }
inline constexpr Mat2 y() {
  return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
}
inline constexpr Mat2 z() { return {1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

double frobenius_norm(const Mat2& m);
double frobenius_distance(const Mat2& u, const Mat2& w);

/// Largest entry magnitude of M + M† and |trace M|, whichever is bigger.
double algebra_residual(const Mat2& m);
bool is_su2_algebra(const Mat2& m, double tol = kAlgebraTolerance);

/// max(‖U U† − I‖_F, |det U − 1|).
double unitary_residual(const Mat2& u);
bool is_su2(const Mat2& u, double tol = kUnitaryTolerance);

SkewMatrix vec_to_matrix(const Vec3& v);

/// Throws Error(NotInAlgebra) when the input is not in su(2) within `tol`.
Vec3 matrix_to_vec(const SkewMatrix& m, double tol = kAlgebraTolerance);

/// Coordinates without the membership check. Only for matrices known to be
/// in su(2) by construction (e.g. conjugates of basis elements).
Vec3 matrix_to_vec_unchecked(const SkewMatrix& m);

/// exp(M(v)) = cos|v| I + (sin|v| / |v|) M(v).
UnitaryGate expm_su2(const Vec3& v);

/// Trace(A B†). Equals 2 (a·b) for A = M(a), B = M(b).
double trace_inner(const SkewMatrix& a, const SkewMatrix& b);

/// Haar-distributed SU(2) element from a normalized Gaussian quaternion.
UnitaryGate haar_random(std::uint64_t seed);
UnitaryGate haar_random(std::mt19937_64& rng);

}  // namespace su2fac
