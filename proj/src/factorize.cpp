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

#include "su2fac/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "su2fac/error.hpp"

namespace su2fac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kFrameGridSize = 64;
constexpr double kFrameMargin = 1e-6;
constexpr double kDegenerateMargin = 1e-9;
constexpr double kProportionalTolerance = 1e-12;

// Representative of t modulo 2π in [0, 2π), or 0 when exp(t X) is the
// identity to within rounding.
double reduce_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t <= kNegligibleAngle || t >= kTwoPi - kNegligibleAngle) return 0.0;
  return t;
}

double relative_margin(const Coefficients& k) {
  const double len = std::hypot(k.a, k.b);
  return len > 0.0 ? std::abs(k.a) / len : 0.0;
}

}  // namespace

std::vector<Vec3> euler_inplane(const UnitaryGate& s_c, double psi) {
  // Rotate the frame so X' becomes e_x: exp(t X') = W exp(t e_x) W† with
  // W = expm_su2((0, 0, -psi/2)).
  const UnitaryGate w = expm_su2({0.0, 0.0, -0.5 * psi});
  const UnitaryGate t = w.dagger() * s_c * w;

  // exp(t1 e_x) exp(t2 e_y) exp(t3 e_x) = q0 I + i(q·σ) with
  //   q0 + i q1 = cos t2 · e^{i(t1 + t3)}
  //   q2 - i q3 = sin t2 · e^{i(t1 - t3)}
  const double q0 = t(0, 0).real();
  const double q1 = t(0, 1).imag();
  const double q2 = t(0, 1).real();
  const double q3 = t(0, 0).imag();

  const double cos_half = std::hypot(q0, q1);
  const double sin_half = std::hypot(q2, q3);
  const double t2 = std::atan2(sin_half, cos_half);
  double sum = std::atan2(q1, q0);
  double diff = std::atan2(-q3, q2);
  // Pick the free angle so that one outer factor vanishes.
  if (sin_half == 0.0) diff = sum;
  if (cos_half == 0.0) sum = diff;

  const Vec3 x_axis{std::cos(psi), std::sin(psi), 0.0};
  const Vec3 y_axis{-std::sin(psi), std::cos(psi), 0.0};

  std::vector<Vec3> out;
  const double middle = reduce_angle(t2);
  if (middle == 0.0) {
    if (const double single = reduce_angle(sum); single != 0.0)
      out.push_back(single * x_axis);
    return out;
  }
  if (const double t1 = reduce_angle(0.5 * (sum + diff)); t1 != 0.0)
    out.push_back(t1 * x_axis);
  out.push_back(middle * y_axis);
  if (const double t3 = reduce_angle(0.5 * (sum - diff)); t3 != 0.0)
    out.push_back(t3 * x_axis);
  return out;
}

Coefficients solve_coefficients(const Vec3& w, const MixingMatrix& mix) {
  const double det = mix.det();
  const double scale =
      std::hypot(mix.a, mix.b) * std::hypot(mix.c, mix.d);
  if (!(std::abs(det) > kIndependenceTolerance * scale)) {
    std::ostringstream msg;
    msg << "mixing matrix is singular (det " << det << ")";
    throw Error(ErrorKind::SingularMixing, msg.str());
  }
  // Cramer's rule on [[a, c], [b, d]] (ka, kb)ᵀ = (w.x, w.y)ᵀ.
  return {(w.x * mix.d - mix.c * w.y) / det, (mix.a * w.y - mix.b * w.x) / det};
}

PositiveFactor enforce_positivity(const Vec3& w, double a_raw, double b_raw) {
  if (!(std::abs(a_raw) > kDegenerateMargin * std::hypot(a_raw, b_raw))) {
    std::ostringstream msg;
    msg << "factor direction has no A component (a = " << a_raw
        << ", b = " << b_raw << ")";
    throw Error(ErrorKind::DegenerateDirection, msg.str());
  }
  if (a_raw > 0.0) return {w, a_raw, b_raw};
  // exp(M(w)) = exp(M(w - 2π w/|w|)), and the rescale is negative.
  const double lambda = 1.0 - kTwoPi / norm(w);
  return {lambda * w, lambda * a_raw, lambda * b_raw};
}

std::vector<Factor> split_for_bound(double a, double b, double c) {
  std::size_t m = 1;
  if (std::abs(b) > c) {
    m = static_cast<std::size_t>(std::ceil(std::abs(b) / c));
    // ceil() of a rounded quotient can come out one short.
    while (std::abs(b / static_cast<double>(m)) > c) ++m;
  }
  const double md = static_cast<double>(m);
  return std::vector<Factor>(m, Factor{a / md, b / md});
}

double choose_frame_angle(const UnitaryGate& s_c, const MixingMatrix& mix) {
  double best_psi = 0.0;
  double best_margin = -1.0;
  for (int j = 0; j < kFrameGridSize; ++j) {
    const double psi = std::numbers::pi * j / kFrameGridSize;
    double margin = 1.0;
    for (const Vec3& w : euler_inplane(s_c, psi))
      margin = std::min(margin, relative_margin(solve_coefficients(w, mix)));
    if (margin > best_margin) {
      best_margin = margin;
      best_psi = psi;
    }
  }
  if (!(best_margin > kFrameMargin)) {
    throw Error(ErrorKind::NoViableFrame,
                "every frame angle puts an Euler factor along a pure-B "
                "direction");
  }
  return best_psi;
}

FactorSequence merge_adjacent(const FactorSequence& seq) {
  auto proportional = [](const Factor& p, const Factor& q) {
    const double cross = p.a * q.b - q.a * p.b;
    const double scale = std::hypot(p.a, p.b) * std::hypot(q.a, q.b);
    return p.a > 0.0 && q.a > 0.0 &&
           std::abs(cross) <= kProportionalTolerance * scale;
  };

  // Neumaier-compensated running sums, so a long run of split pieces adds
  // back up to the unsplit coefficients to within an ulp or so.
  struct Group {
    double a, a_err, b, b_err;
    Factor value() const { return {a + a_err, b + b_err}; }
    void add(const Factor& f) {
      accumulate(a, a_err, f.a);
      accumulate(b, b_err, f.b);
    }
    static void accumulate(double& sum, double& err, double x) {
      const double t = sum + x;
      err += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
  };

  std::vector<Factor> current = seq.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Group> groups;
    groups.reserve(current.size());
    for (const Factor& f : current) {
      if (!groups.empty() && proportional(groups.back().value(), f)) {
        Group candidate = groups.back();
        candidate.add(f);
        const Factor merged = candidate.value();
        if (merged.a > 0.0 && std::abs(merged.b) <= seq.bound_c) {
          groups.back() = candidate;
          changed = true;
          continue;
        }
      }
      groups.push_back({f.a, 0.0, f.b, 0.0});
    }
    current.clear();
    for (const Group& g : groups) current.push_back(g.value());
  }

  FactorSequence out = seq;
  out.factors = std::move(current);
  return out;
}

UnitaryGate reassemble(const GeneratorPair& pair,
                       const std::vector<Factor>& factors) {
  UnitaryGate prod = UnitaryGate::identity();
  for (const Factor& f : factors)
    prod = prod * expm_su2(f.a * pair.alpha + f.b * pair.beta);
  return prod;
}

double verify(const UnitaryGate& s, const GeneratorPair& pair,
              const std::vector<Factor>& factors) {
  return frobenius_distance(s, reassemble(pair, factors));
}

double verify(const UnitaryGate& s, const FactorSequence& seq) {
  return verify(s, seq.pair, seq.factors);
}

Factorization factorize(const UnitaryGate& s, const GeneratorPair& pair,
                        double c, double tol) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw Error(ErrorKind::InvalidBound, "bound C must be positive and finite");
  }
  if (!(std::isfinite(tol) && tol > 0.0)) {
    throw Error(ErrorKind::InvalidBound, "tolerance must be positive");
  }
  if (!is_su2(s, 1e-8)) {
    std::ostringstream msg;
    msg << "target is not in SU(2) (residual " << unitary_residual(s) << ")";
    throw Error(ErrorKind::NotUnitary, msg.str());
  }

  const CanonicalFrame frame = canonicalize(pair);
  const UnitaryGate& v = frame.conjugator;
  const UnitaryGate s_c = v * s * v.dagger();
  const double psi = choose_frame_angle(s_c, frame.mix);

  // Conjugating each factor back by V telescopes to V† S_c V = S, and
  // R (a alpha + b beta) = a alpha_c + b beta_c, so the coefficients found
  // in the canonical frame apply unchanged to the original generators.
  FactorSequence raw{{}, pair, c, 0.0};
  for (const Vec3& w : euler_inplane(s_c, psi)) {
    const Coefficients k = solve_coefficients(w, frame.mix);
    const PositiveFactor p = enforce_positivity(w, k.a, k.b);
    for (const Factor& f : split_for_bound(p.a, p.b, c))
      raw.factors.push_back(f);
  }
  raw.residual = verify(s, raw);

  Factorization result;
  result.sequence = merge_adjacent(raw);
  result.sequence.residual = verify(s, result.sequence);

  DecompositionReport& rep = result.report;
  rep.q_raw = static_cast<int>(raw.factors.size());
  rep.q = static_cast<int>(result.sequence.factors.size());
  rep.residual = result.sequence.residual;
  rep.residual_raw = raw.residual;
  rep.frame_angle = psi;
  rep.conjugator = v;

  if (!(rep.residual <= tol)) {
    std::ostringstream msg;
    msg << "reassembly residual " << rep.residual << " exceeds tolerance "
        << tol;
    throw Error(ErrorKind::ResidualExceeded, msg.str());
  }
  return result;
}

}  // namespace su2fac
