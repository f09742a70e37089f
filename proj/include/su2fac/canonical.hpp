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

#include "su2fac/su2.hpp"

namespace su2fac {

/// 3x3 real matrix, row-major. Holds elements of SO(3) acting on the
/// coordinates of su(2).
class Rotation3 {
 public:
  constexpr Rotation3() = default;
  explicit constexpr Rotation3(const std::array<double, 9>& rows) : m_(rows) {}

  static constexpr Rotation3 identity() {
    return Rotation3({1, 0, 0, 0, 1, 0, 0, 0, 1});
  }
  /// Right-handed rotation by `angle` about the z axis (acts in the xy plane).
  static Rotation3 about_z(double cos_angle, double sin_angle);
  /// Right-handed rotation by `angle` about the y axis (acts in the zx plane).
  static Rotation3 about_y(double cos_angle, double sin_angle);

  constexpr double& operator()(int r, int c) { return m_[3 * r + c]; }
  constexpr double operator()(int r, int c) const { return m_[3 * r + c]; }

  Rotation3 transpose() const;
  double det() const;

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b);
  friend Vec3 operator*(const Rotation3& r, const Vec3& v);
  friend bool operator==(const Rotation3&, const Rotation3&) = default;

 private:
  std::array<double, 9> m_{};
};

double frobenius_distance(const Rotation3& a, const Rotation3& b);

/// max(‖R Rᵀ − I‖_F, |det R − 1|).
double rotation_residual(const Rotation3& r);

/// The two generators A = M(alpha), B = M(beta) of the factorization.
struct GeneratorPair {
  Vec3 alpha;
  Vec3 beta;
};

inline constexpr double kIndependenceTolerance = 1e-10;

/// |alpha × beta| > 1e-10 |alpha| |beta|, and both nonzero and finite.
bool is_independent(const GeneratorPair& pair);

/// Real 2x2 matrix [[a, c], [b, d]]: in the canonical frame
/// A = a X + b Y and B = c X + d Y with X = iσx, Y = iσy.
struct MixingMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const { return a * d - c * b; }
};

struct CanonicalFrame {
  UnitaryGate conjugator;  // V
  Rotation3 rotation;      // adjoint_rotation(V)
  Vec3 alpha_c;            // rotation * alpha, z component nulled
  Vec3 beta_c;             // rotation * beta, z component nulled
  MixingMatrix mix;
};

/// Column j is the coordinate vector of V M(e_j) V†.
Rotation3 adjoint_rotation(const UnitaryGate& v);

/// One of the two SU(2) preimages of `r` under adjoint_rotation. The sign is
/// fixed so that the first nonzero of (Re V00, Im V01, Re V01, Im V00) is
/// positive. Throws Error(NotARotation) when `r` is off SO(3) by more than
/// `tol`.
UnitaryGate lift_rotation(const Rotation3& r, double tol = 1e-8);

/// Applies the lift sign convention of lift_rotation to an existing SU(2)
/// element.
UnitaryGate canonical_sign(const UnitaryGate& v);

/// Product of two coordinate-axis Givens rotations, about z then about y,
/// that takes the unit normal of (alpha × beta) to e_z. Both generators then
/// lie in the xy plane. Throws Error(DependentGenerators).
Rotation3 nulling_rotation(const GeneratorPair& pair);

/// Conjugator V with V A V† and V B V† in span{iσx, iσy}, plus the mixing
/// matrix of the transformed generators. Throws Error(DependentGenerators).
CanonicalFrame canonicalize(const GeneratorPair& pair);

}  // namespace su2fac
