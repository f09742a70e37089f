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

#include "su2fac/selftest.hpp"

#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include "su2fac/error.hpp"
#include "su2fac/factorize.hpp"

namespace su2fac {

Vec3 random_vec(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double x = u(rng);
  const double y = u(rng);
  const double z = u(rng);
  return {x, y, z};
}

GeneratorPair random_independent_pair(std::mt19937_64& rng) {
  for (;;) {
    GeneratorPair p{random_vec(rng), random_vec(rng)};
    if (norm(cross(p.alpha, p.beta)) >= 1e-3 * norm(p.alpha) * norm(p.beta))
      return p;
  }
}

GeneratorPair random_planar_pair(std::mt19937_64& rng) {
  for (;;) {
    GeneratorPair p{random_vec(rng), random_vec(rng)};
    p.alpha.z = 0.0;
    p.beta.z = 0.0;
    if (norm(cross(p.alpha, p.beta)) >= 1e-3 * norm(p.alpha) * norm(p.beta))
      return p;
  }
}

namespace {

using Check = std::function<std::optional<std::string>(std::mt19937_64&, int)>;

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed,
                      std::uint64_t suite_id, const Check& check) {
  SuiteResult res{name, 0, trials, {}};
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + suite_id);
  for (int i = 0; i < trials; ++i) {
    std::optional<std::string> failure;
    try {
      failure = check(rng, i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure) {
      ++res.passed;
    } else if (res.first_failure.empty()) {
      res.first_failure = "seed " + std::to_string(seed) + ", index " +
                          std::to_string(i) + ": " + *failure;
    }
  }
  return res;
}

std::optional<std::string> fail_if(bool bad, const std::string& what) {
  if (bad) return what;
  return std::nullopt;
}

Mat2 taylor_expm(const Mat2& m, int terms) {
  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k < terms; ++k) {
    term = (1.0 / k) * (term * m);
    sum = sum + term;
  }
  return sum;
}

Vec3 random_direction(std::mt19937_64& rng) {
  for (;;) {
    const Vec3 v = random_vec(rng);
    const double n = norm(v);
    if (n > 1e-3 && n <= 1.0) return (1.0 / n) * v;
  }
}

}  // namespace

std::vector<SuiteResult> run_selftest(int trials, std::uint64_t seed) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double bounds[] = {0.05, 0.1, 0.5, 1.0, 2.0};
  std::vector<SuiteResult> out;

  // su2-core
  out.push_back(run_suite("su2.round_trip", trials, seed, 1,
                          [](std::mt19937_64& rng, int) {
                            const Vec3 v = random_vec(rng, -10.0, 10.0);
                            const Vec3 back = matrix_to_vec(vec_to_matrix(v));
                            const double err = norm(back - v);
                            return fail_if(err > 1e-14 * std::max(1.0, norm(v)),
                                           "round trip error " + fmt(err));
                          }));
  out.push_back(run_suite(
      "su2.expm_taylor", trials, seed, 2, [](std::mt19937_64& rng, int) {
        std::uniform_real_distribution<double> radius(0.0, std::numbers::pi);
        const Vec3 v = radius(rng) * random_direction(rng);
        const double err =
            frobenius_distance(expm_su2(v), taylor_expm(vec_to_matrix(v), 25));
        return fail_if(err > 1e-12, "Taylor mismatch " + fmt(err));
      }));
  out.push_back(run_suite(
      "su2.periodicity", trials, seed, 3, [&](std::mt19937_64& rng, int) {
        std::uniform_real_distribution<double> radius(0.1, 6.0);
        const Vec3 v = radius(rng) * random_direction(rng);
        const Vec3 shifted = (1.0 + kTwoPi / norm(v)) * v;
        const double err = frobenius_distance(expm_su2(v), expm_su2(shifted));
        return fail_if(err > 1e-12, "periodicity error " + fmt(err));
      }));
  out.push_back(run_suite(
      "su2.inner_product", trials, seed, 4, [](std::mt19937_64& rng, int) {
        const Vec3 v = random_vec(rng);
        const Vec3 w = random_vec(rng);
        const double err = std::abs(
            trace_inner(vec_to_matrix(v), vec_to_matrix(w)) - 2.0 * dot(v, w));
        return fail_if(err > 1e-12, "inner product error " + fmt(err));
      }));
  // Fixed sample size: the tolerance is five standard errors at 10^4.
  out.push_back(run_suite("su2.haar_moment", 1, seed, 5,
                          [](std::mt19937_64& rng, int) {
                            constexpr int kSamples = 10000;
                            double sum = 0.0;
                            for (int i = 0; i < kSamples; ++i)
                              sum += std::norm(haar_random(rng).trace());
                            const double mean = sum / kSamples;
                            return fail_if(std::abs(mean - 1.0) > 0.05,
                                           "E|tr U|^2 = " + fmt(mean));
                          }));

  // canonicalizer
  out.push_back(run_suite(
      "canonical.double_cover", trials, seed, 6, [](std::mt19937_64& rng, int) {
        const UnitaryGate v = haar_random(rng);
        return fail_if(!(adjoint_rotation(v) == adjoint_rotation(-v)),
                       "R(V) != R(-V)");
      }));
  out.push_back(run_suite(
      "canonical.homomorphism", trials, seed, 7, [](std::mt19937_64& rng, int) {
        const UnitaryGate v = haar_random(rng);
        const UnitaryGate w = haar_random(rng);
        const double err = frobenius_distance(
            adjoint_rotation(v * w), adjoint_rotation(v) * adjoint_rotation(w));
        return fail_if(err > 1e-12, "homomorphism error " + fmt(err));
      }));
  out.push_back(run_suite(
      "canonical.lift_round_trip", trials, seed, 8,
      [](std::mt19937_64& rng, int) {
        const Rotation3 r = adjoint_rotation(haar_random(rng));
        const double err = frobenius_distance(adjoint_rotation(lift_rotation(r)), r);
        return fail_if(err > 1e-10, "lift error " + fmt(err));
      }));
  out.push_back(run_suite(
      "canonical.nulling", trials, seed, 9, [](std::mt19937_64& rng, int) {
        const GeneratorPair p = random_independent_pair(rng);
        const CanonicalFrame f = canonicalize(p);
        const double za = std::abs(f.alpha_c.z) / norm(p.alpha);
        const double zb = std::abs(f.beta_c.z) / norm(p.beta);
        const double det_err =
            std::abs(std::abs(f.mix.det()) - norm(cross(p.alpha, p.beta)));
        if (za > 1e-12 || zb > 1e-12)
          return fail_if(true, "z residue " + fmt(std::max(za, zb)));
        return fail_if(det_err > 1e-10, "det(mix) error " + fmt(det_err));
      }));
  out.push_back(run_suite(
      "canonical.conjugation", trials, seed, 10, [](std::mt19937_64& rng, int) {
        const GeneratorPair p = random_independent_pair(rng);
        const CanonicalFrame f = canonicalize(p);
        const UnitaryGate& v = f.conjugator;
        const double err = std::max(
            norm(matrix_to_vec(v * vec_to_matrix(p.alpha) * v.dagger()) - f.alpha_c),
            norm(matrix_to_vec(v * vec_to_matrix(p.beta) * v.dagger()) - f.beta_c));
        return fail_if(err > 1e-10, "matrix/vector picture mismatch " + fmt(err));
      }));

  // factorizer
  auto contract = [&](const UnitaryGate& s, const GeneratorPair& p,
                      double c) -> std::optional<std::string> {
    const Factorization res = factorize(s, p, c);
    const double residual = verify(s, p, res.sequence.factors);
    if (residual > 1e-9) return "residual " + fmt(residual);
    for (const Factor& f : res.sequence.factors) {
      if (!(f.a >= 1e-12)) return "O1 violated: a = " + fmt(f.a);
      if (!(std::abs(f.b) <= c)) return "O2 violated: |b| = " + fmt(f.b);
    }
    return std::nullopt;
  };
  out.push_back(run_suite(
      "factorizer.end_to_end", trials, seed, 11,
      [&](std::mt19937_64& rng, int i) {
        const UnitaryGate s = haar_random(rng);
        const GeneratorPair p = random_independent_pair(rng);
        return contract(s, p, bounds[i % 5]);
      }));
  out.push_back(run_suite(
      "factorizer.canonical_pairs", trials, seed, 12,
      [&](std::mt19937_64& rng, int i) -> std::optional<std::string> {
        const UnitaryGate s = haar_random(rng);
        const GeneratorPair p = random_planar_pair(rng);
        const CanonicalFrame f = canonicalize(p);
        if (frobenius_distance(f.conjugator, UnitaryGate::identity()) > 1e-15 &&
            frobenius_distance(f.conjugator, -UnitaryGate::identity()) > 1e-15)
          return "planar pair did not give V = ±I";
        return contract(s, p, bounds[i % 5]);
      }));
  out.push_back(run_suite(
      "factorizer.merge", trials, seed, 13,
      [&](std::mt19937_64& rng, int i) -> std::optional<std::string> {
        const UnitaryGate s = haar_random(rng);
        const GeneratorPair p = random_independent_pair(rng);
        const Factorization res = factorize(s, p, bounds[i % 5]);
        if (res.report.q > res.report.q_raw) return "merge increased Q";
        const double drift = std::abs(res.report.residual - res.report.residual_raw);
        return fail_if(drift > 1e-12, "merge moved residual by " + fmt(drift));
      }));
  out.push_back(run_suite(
      "factorizer.split_merge", trials, seed, 14,
      [](std::mt19937_64& rng, int) -> std::optional<std::string> {
        std::uniform_real_distribution<double> ua(0.01, 5.0), ub(-5.0, 5.0),
            slack(1e-3, 1.0), shrink(0.01, 1.0);
        const double a = ua(rng), b = ub(rng);
        // The factor respects `original`; it is split under a tighter bound.
        const double original = std::abs(b) * (1.0 + slack(rng));
        FactorSequence seq;
        seq.factors = split_for_bound(a, b, shrink(rng) * original);
        seq.bound_c = original;
        const FactorSequence merged = merge_adjacent(seq);
        if (merged.factors.size() != 1)
          return "merge left " + std::to_string(merged.factors.size()) + " factors";
        const double err = std::max(std::abs(merged.factors[0].a - a),
                                    std::abs(merged.factors[0].b - b));
        return fail_if(err > 1e-14 * std::max({1.0, a, std::abs(b)}),
                       "split/merge error " + fmt(err));
      }));
  out.push_back(run_suite(
      "factorizer.bound_scaling", trials, seed, 15,
      [](std::mt19937_64& rng, int) -> std::optional<std::string> {
        const UnitaryGate s = haar_random(rng);
        const GeneratorPair p = random_independent_pair(rng);
        std::size_t prev = std::numeric_limits<std::size_t>::max();
        for (double c : {0.05, 0.1, 0.2, 0.4, 0.8}) {
          const std::size_t q = factorize(s, p, c).sequence.factors.size();
          if (q > prev) return "Q increased at C = " + fmt(c);
          prev = q;
        }
        return std::nullopt;
      }));
  out.push_back(run_suite(
      "factorizer.positivity", trials, seed, 16,
      [&](std::mt19937_64& rng, int) -> std::optional<std::string> {
        std::uniform_real_distribution<double> angle(0.0, kTwoPi),
            radius(1e-3, kTwoPi - 1e-3);
        const double th = angle(rng);
        const Vec3 w = radius(rng) * Vec3{std::cos(th), std::sin(th), 0.0};
        const GeneratorPair p = random_planar_pair(rng);
        const MixingMatrix mix{p.alpha.x, p.alpha.y, p.beta.x, p.beta.y};
        const Coefficients k = solve_coefficients(w, mix);
        if (std::abs(k.a) <= 1e-9 * std::hypot(k.a, k.b)) return std::nullopt;
        const PositiveFactor pf = enforce_positivity(w, k.a, k.b);
        if (!(pf.a > 0.0)) return "a not positive: " + fmt(pf.a);
        const double err = frobenius_distance(expm_su2(pf.w), expm_su2(w));
        return fail_if(err > 1e-12, "exponential changed by " + fmt(err));
      }));
  return out;
}

std::string format_selftest(const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  int failed = 0;
  for (const SuiteResult& s : suites) {
    out << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.passed << "/"
        << s.total << "\n";
    if (!s.ok()) {
      ++failed;
      out << "     first failure: " << s.first_failure << "\n";
    }
  }
  out << (failed == 0 ? "all " + std::to_string(suites.size()) + " suites passed"
                      : std::to_string(failed) + " suite(s) failed")
      << "\n";
  return out.str();
}

}  // namespace su2fac
