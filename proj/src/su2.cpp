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

#include "su2fac/su2.hpp"

#include <algorithm>
#include <sstream>

#include "su2fac/error.hpp"

namespace su2fac {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInAlgebra:
      return "NotInAlgebra";
    case ErrorKind::NotUnitary:
      return "NotUnitary";
    case ErrorKind::NotARotation:
      return "NotARotation";
    case ErrorKind::DependentGenerators:
      return "DependentGenerators";
    case ErrorKind::SingularMixing:
      return "SingularMixing";
    case ErrorKind::DegenerateDirection:
      return "DegenerateDirection";
    case ErrorKind::NoViableFrame:
      return "NoViableFrame";
    case ErrorKind::InvalidBound:
      return "InvalidBound";
    case ErrorKind::ResidualExceeded:
      return "ResidualExceeded";
  }
  return "Unknown";
}

double frobenius_norm(const Mat2& m) {
  double sum = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) sum += std::norm(m(r, c));
  return std::sqrt(sum);
}

double frobenius_distance(const Mat2& u, const Mat2& w) {
  return frobenius_norm(u - w);
}

double algebra_residual(const Mat2& m) {
  const Mat2 skew = m + m.dagger();
  double worst = std::abs(m.trace());
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(skew(r, c)));
  return worst;
}

bool is_su2_algebra(const Mat2& m, double tol) {
  const double res = algebra_residual(m);
  return std::isfinite(res) && res <= tol;
}

double unitary_residual(const Mat2& u) {
  const double orth = frobenius_distance(u * u.dagger(), Mat2::identity());
  return std::max(orth, std::abs(u.det() - 1.0));
}

bool is_su2(const Mat2& u, double tol) {
  const double res = unitary_residual(u);
  return std::isfinite(res) && res <= tol;
}

SkewMatrix vec_to_matrix(const Vec3& v) {
  // i(x σx + y σy + z σz) = [[i z, y + i x], [-y + i x, -i z]]
  return {Complex(0.0, v.z), Complex(v.y, v.x), Complex(-v.y, v.x),
          Complex(0.0, -v.z)};
}

Vec3 matrix_to_vec_unchecked(const SkewMatrix& m) {
  return {0.5 * (m(0, 1).imag() + m(1, 0).imag()),
          0.5 * (m(0, 1).real() - m(1, 0).real()),
          0.5 * (m(0, 0).imag() - m(1, 1).imag())};
}

Vec3 matrix_to_vec(const SkewMatrix& m, double tol) {
  if (!is_su2_algebra(m, tol)) {
    std::ostringstream msg;
    msg << "matrix is not skew-Hermitian and traceless (residual "
        << algebra_residual(m) << ", tolerance " << tol << ")";
    throw Error(ErrorKind::NotInAlgebra, msg.str());
  }
  return matrix_to_vec_unchecked(m);
}

UnitaryGate expm_su2(const Vec3& v) {
  const double r = norm(v);
  // sin(r)/r, with the two-term series near zero.
  const double sinc = r < 1e-8 ? 1.0 - r * r / 6.0 : std::sin(r) / r;
  const double c = std::cos(r);
  return {Complex(c, sinc * v.z), Complex(sinc * v.y, sinc * v.x),
          Complex(-sinc * v.y, sinc * v.x), Complex(c, -sinc * v.z)};
}

double trace_inner(const SkewMatrix& a, const SkewMatrix& b) {
  return (a * b.dagger()).trace().real();
}

UnitaryGate haar_random(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double q[4];
  double len = 0.0;
  do {
    for (double& c : q) c = gauss(rng);
    len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  } while (len < 1e-12);
  for (double& c : q) c /= len;
  return {Complex(q[0], q[3]), Complex(q[2], q[1]), Complex(-q[2], q[1]),
          Complex(q[0], -q[3])};
}

UnitaryGate haar_random(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random(rng);
}

}  // namespace su2fac
