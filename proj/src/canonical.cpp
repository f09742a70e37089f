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

#include "su2fac/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "su2fac/error.hpp"

namespace su2fac {

Rotation3 Rotation3::about_z(double cos_angle, double sin_angle) {
  return Rotation3(
      {cos_angle, -sin_angle, 0.0, sin_angle, cos_angle, 0.0, 0.0, 0.0, 1.0});
}

Rotation3 Rotation3::about_y(double cos_angle, double sin_angle) {
  return Rotation3(
      {cos_angle, 0.0, sin_angle, 0.0, 1.0, 0.0, -sin_angle, 0.0, cos_angle});
}

Rotation3 Rotation3::transpose() const {
  Rotation3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Rotation3::det() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
  Rotation3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

Vec3 operator*(const Rotation3& r, const Vec3& v) {
  return {r(0, 0) * v.x + r(0, 1) * v.y + r(0, 2) * v.z,
          r(1, 0) * v.x + r(1, 1) * v.y + r(1, 2) * v.z,
          r(2, 0) * v.x + r(2, 1) * v.y + r(2, 2) * v.z};
}

double frobenius_distance(const Rotation3& a, const Rotation3& b) {
  double sum = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const double d = a(r, c) - b(r, c);
      sum += d * d;
    }
  return std::sqrt(sum);
}

double rotation_residual(const Rotation3& r) {
  const double orth =
      frobenius_distance(r * r.transpose(), Rotation3::identity());
  return std::max(orth, std::abs(r.det() - 1.0));
}

bool is_independent(const GeneratorPair& pair) {
  if (!is_finite(pair.alpha) || !is_finite(pair.beta)) return false;
  const double scale = norm(pair.alpha) * norm(pair.beta);
  return scale > 0.0 &&
         norm(cross(pair.alpha, pair.beta)) > kIndependenceTolerance * scale;
}

Rotation3 adjoint_rotation(const UnitaryGate& v) {
  const Mat2 vd = v.dagger();
  const Vec3 cols[3] = {
      matrix_to_vec_unchecked(v * vec_to_matrix({1, 0, 0}) * vd),
      matrix_to_vec_unchecked(v * vec_to_matrix({0, 1, 0}) * vd),
      matrix_to_vec_unchecked(v * vec_to_matrix({0, 0, 1}) * vd)};
  Rotation3 r;
  for (int c = 0; c < 3; ++c) {
    r(0, c) = cols[c].x;
    r(1, c) = cols[c].y;
    r(2, c) = cols[c].z;
  }
  return r;
}

namespace {

// V = q0 I + i(q1 σx + q2 σy + q3 σz).
struct Quat {
  double q0, q1, q2, q3;
};

UnitaryGate from_quat(const Quat& q) {
  return {Complex(q.q0, q.q3), Complex(q.q2, q.q1), Complex(-q.q2, q.q1),
          Complex(q.q0, -q.q3)};
}

Quat to_quat(const UnitaryGate& v) {
  return {v(0, 0).real(), v(0, 1).imag(), v(0, 1).real(), v(0, 0).imag()};
}

Quat with_canonical_sign(Quat q) {
  for (double c : {q.q0, q.q1, q.q2, q.q3}) {
    if (c == 0.0) continue;
    if (c < 0.0) q = {-q.q0, -q.q1, -q.q2, -q.q3};
    break;
  }
  return q;
}

}  // namespace

UnitaryGate canonical_sign(const UnitaryGate& v) {
  return from_quat(with_canonical_sign(to_quat(v)));
}

UnitaryGate lift_rotation(const Rotation3& r, double tol) {
  const double res = rotation_residual(r);
  if (!std::isfinite(res) || res > tol) {
    std::ostringstream msg;
    msg << "matrix is not in SO(3) (residual " << res << ", tolerance " << tol
        << ")";
    throw Error(ErrorKind::NotARotation, msg.str());
  }

  // Shepperd's method on the unit quaternion (w, x, y, z) whose standard
  // rotation is r, pivoting on the largest of {trace, r00, r11, r22}. Under
  // the Pauli convention, V = w I - i(x σx + y σy + z σz).
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  double w, x, y, z;
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
    x = (r(2, 1) - r(1, 2)) / (4.0 * w);
    y = (r(0, 2) - r(2, 0)) / (4.0 * w);
    z = (r(1, 0) - r(0, 1)) / (4.0 * w);
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    x = 0.5 * std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2)));
    w = (r(2, 1) - r(1, 2)) / (4.0 * x);
    y = (r(0, 1) + r(1, 0)) / (4.0 * x);
    z = (r(0, 2) + r(2, 0)) / (4.0 * x);
  } else if (r(1, 1) >= r(2, 2)) {
    y = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) + r(1, 1) - r(2, 2)));
    w = (r(0, 2) - r(2, 0)) / (4.0 * y);
    x = (r(0, 1) + r(1, 0)) / (4.0 * y);
    z = (r(1, 2) + r(2, 1)) / (4.0 * y);
  } else {
    z = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) - r(1, 1) + r(2, 2)));
    w = (r(1, 0) - r(0, 1)) / (4.0 * z);
    x = (r(0, 2) + r(2, 0)) / (4.0 * z);
    y = (r(1, 2) + r(2, 1)) / (4.0 * z);
  }
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  const Quat q{w / len, -x / len, -y / len, -z / len};
  return from_quat(with_canonical_sign(q));
}

namespace {

// Cosine/sine pairs of the two coordinate-axis Givens rotations whose
// product Ry * Rz takes the unit normal of the generator plane to e_z.
struct NullingGivens {
  double cz, sz;
  double cy, sy;
};

NullingGivens nulling_givens(const GeneratorPair& pair) {
  if (!is_independent(pair)) {
    throw Error(ErrorKind::DependentGenerators,
                "generators are not linearly independent");
  }
  // Orient the normal into the upper half space so that a pair already in
  // the xy plane gets R = I whichever way round it is given.
  const Vec3 cr = cross(pair.alpha, pair.beta);
  const Vec3 n = (cr.z < 0.0 ? -1.0 : 1.0) / norm(cr) * cr;

  NullingGivens g;
  // About z: (nx, ny) -> (rho, 0).
  const double rho = std::hypot(n.x, n.y);
  g.cz = rho > 0.0 ? n.x / rho : 1.0;
  g.sz = rho > 0.0 ? -n.y / rho : 0.0;
  // About y: (rho, nz) -> (0, 1).
  const double h = std::hypot(rho, n.z);
  g.cy = n.z / h;
  g.sy = -rho / h;
  return g;
}

}  // namespace

Rotation3 nulling_rotation(const GeneratorPair& pair) {
  const NullingGivens g = nulling_givens(pair);
  return Rotation3::about_y(g.cy, g.sy) * Rotation3::about_z(g.cz, g.sz);
}

CanonicalFrame canonicalize(const GeneratorPair& pair) {
  const NullingGivens g = nulling_givens(pair);
  const Rotation3 rot =
      Rotation3::about_y(g.cy, g.sy) * Rotation3::about_z(g.cz, g.sz);

  // expm_su2(t e_k) induces a rotation by -2t about e_k, so each Givens
  // rotation lifts to the exponential of minus its half angle.
  const UnitaryGate vz = expm_su2({0.0, 0.0, -0.5 * std::atan2(g.sz, g.cz)});
  const UnitaryGate vy = expm_su2({0.0, -0.5 * std::atan2(g.sy, g.cy), 0.0});

  CanonicalFrame frame;
  frame.conjugator = canonical_sign(vy * vz);
  frame.rotation = rot;
  frame.alpha_c = rot * pair.alpha;
  frame.beta_c = rot * pair.beta;
  frame.mix = {frame.alpha_c.x, frame.alpha_c.y, frame.beta_c.x,
               frame.beta_c.y};
  return frame;
}

}  // namespace su2fac
