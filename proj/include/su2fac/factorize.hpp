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

#include <vector>

#include "su2fac/canonical.hpp"
#include "su2fac/su2.hpp"

namespace su2fac {

/// One factor exp(a A + b B) of the product. Requires a > 0 and |b| <= C.
struct Factor {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct FactorSequence {
  std::vector<Factor> factors;
  GeneratorPair pair;
  double bound_c = 0.0;
  double residual = 0.0;
};

struct DecompositionReport {
  int q_raw = 0;              // factor count before merging
  int q = 0;                  // factor count after merging
  double residual = 0.0;      // after merging
  double residual_raw = 0.0;  // before merging
  double frame_angle = 0.0;
  UnitaryGate conjugator = UnitaryGate::identity();
};

struct Factorization {
  FactorSequence sequence;
  DecompositionReport report;
};

struct Coefficients {
  double a = 0.0;
  double b = 0.0;
};

struct PositiveFactor {
  Vec3 w;
  double a = 0.0;
  double b = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Euler angles below this (or this close to 2π) are identity factors and
/// are dropped.
inline constexpr double kNegligibleAngle = 1e-14;

/// Writes S_c as a product of exponentials alternating along
/// X' = (cos ψ, sin ψ, 0) and Y' = (-sin ψ, cos ψ, 0), starting and ending
/// with X'. Angles are reduced to (0, 2π) and identity factors are omitted,
/// so the result has between zero and three entries.
std::vector<Vec3> euler_inplane(const UnitaryGate& s_c, double psi);

/// Solves mix (a, b)ᵀ = (w.x, w.y)ᵀ. Throws Error(SingularMixing).
Coefficients solve_coefficients(const Vec3& w, const MixingMatrix& mix);

/// Makes the A coefficient positive without changing exp(M(w)): negative
/// solutions are rescaled by 1 - 2π/|w|. Throws Error(DegenerateDirection)
/// when |a_raw| is negligible relative to |(a_raw, b_raw)|.
PositiveFactor enforce_positivity(const Vec3& w, double a_raw, double b_raw);

/// m = max(1, ceil(|b| / C)) equal pieces (a/m, b/m).
std::vector<Factor> split_for_bound(double a, double b, double c);

/// Frame angle on a 64-point grid over [0, π) maximizing the smallest
/// relative |a_raw| over the Euler factors. Throws Error(NoViableFrame).
double choose_frame_angle(const UnitaryGate& s_c, const MixingMatrix& mix);

/// Concatenates neighbouring factors whose coefficient pairs are positive
/// multiples of each other, as long as the sum still respects the bound.
FactorSequence merge_adjacent(const FactorSequence& seq);

/// S = Π_k exp(a_k A + b_k B) with a_k > 0 and |b_k| <= C.
///
/// Throws Error with kind DependentGenerators, InvalidBound, NotUnitary,
/// NoViableFrame, or ResidualExceeded (reassembly error above `tol`).
Factorization factorize(const UnitaryGate& s, const GeneratorPair& pair,
                        double c, double tol = kDefaultTolerance);

/// ‖S − Π_k expm_su2(a_k alpha + b_k beta)‖_F, computed from scratch.
double verify(const UnitaryGate& s, const GeneratorPair& pair,
              const std::vector<Factor>& factors);
double verify(const UnitaryGate& s, const FactorSequence& seq);

/// Product of the factor exponentials, leftmost factor first.
UnitaryGate reassemble(const GeneratorPair& pair,
                       const std::vector<Factor>& factors);

}  // namespace su2fac
