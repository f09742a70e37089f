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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "su2fac/canonical.hpp"
#include "su2fac/cli.hpp"
#include "su2fac/factorize.hpp"
#include "su2fac/problem_io.hpp"

using namespace su2fac;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

GeneratorPair draw_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Vec3 a{u(rng), u(rng), u(rng)};
    const Vec3 b{u(rng), u(rng), u(rng)};
    if (norm(cross(a, b)) >= 1e-3 * norm(a) * norm(b)) return {a, b};
  }
}

Vec3 draw_ball(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Vec3 v{u(rng), u(rng), u(rng)};
    if (norm(v) <= 1.0) return radius * v;
  }
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

const double kBounds[] = {0.05, 0.1, 0.5, 1.0, 2.0};

// 1. End-to-end contract.
Outcome end_to_end() {
  std::mt19937_64 rng(1001);
  double worst = 0.0, min_a = INFINITY, worst_b_ratio = 0.0;
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) {
    const Mat2 s = haar_random(rng);
    const GeneratorPair p = draw_pair(rng);
    const double c = kBounds[i % 5];
    const Factorization res = factorize(s, p, c);
    const double residual = verify(s, p, res.sequence.factors);
    worst = std::max(worst, residual);
    bool ok = residual <= 1e-9;
    for (const Factor& f : res.sequence.factors) {
      min_a = std::min(min_a, f.a);
      worst_b_ratio = std::max(worst_b_ratio, std::abs(f.b) / c);
      ok = ok && f.a > 0.0 && std::abs(f.b) <= c;
    }
    if (!ok) ++failures;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = failures == 0 && secs < 10.0;
  o.detail = "max residual " + sci(worst) + ", min a_k " + sci(min_a) +
             ", max |b_k|/C " + std::to_string(worst_b_ratio) + ", failures " +
             std::to_string(failures) + ", " + std::to_string(secs) + " s";
  return o;
}

// 2. Canonicalization without orthogonality.
Outcome canonicalization() {
  std::mt19937_64 rng(1002);
  double worst_z = 0.0, worst_det = 0.0;
  int tilted = 0, non_orthogonal = 0;
  for (int i = 0; i < 1000; ++i) {
    const GeneratorPair p = draw_pair(rng);
    if (std::abs(p.alpha.z) > 1e-3 || std::abs(p.beta.z) > 1e-3) ++tilted;
    if (std::abs(p.alpha.x * p.beta.x + p.alpha.y * p.beta.y) > 1e-3) ++non_orthogonal;
    const CanonicalFrame f = canonicalize(p);
    worst_z = std::max({worst_z, std::abs(f.alpha_c.z) / norm(p.alpha),
                        std::abs(f.beta_c.z) / norm(p.beta)});
    worst_det = std::max(worst_det,
                         std::abs(std::abs(f.mix.det()) - norm(cross(p.alpha, p.beta))));
  }
  Outcome o;
  o.pass = worst_z <= 1e-10 && worst_det <= 1e-10 && tilted > 900 && non_orthogonal > 900;
  o.detail = "max relative z " + sci(worst_z) + ", max det error " + sci(worst_det) +
             ", pairs with z components " + std::to_string(tilted) +
             ", non-orthogonal projections " + std::to_string(non_orthogonal);
  return o;
}

// 3. Double cover, homomorphism, lift.
Outcome adjoint_map() {
  std::mt19937_64 rng(1003);
  bool exact = true;
  double hom = 0.0, lift = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Mat2 v = haar_random(rng);
    const Mat2 w = haar_random(rng);
    exact = exact && adjoint_rotation(v) == adjoint_rotation(-v);
    hom = std::max(hom, frobenius_distance(adjoint_rotation(v * w),
                                           adjoint_rotation(v) * adjoint_rotation(w)));
    const Rotation3 r = adjoint_rotation(v);
    lift = std::max(lift, frobenius_distance(adjoint_rotation(lift_rotation(r)), r));
  }
  Outcome o;
  o.pass = exact && hom <= 1e-12 && lift <= 1e-10;
  o.detail = std::string("R(V) == R(-V) ") + (exact ? "always" : "NOT always") +
             ", max homomorphism error " + sci(hom) + ", max lift error " + sci(lift);
  return o;
}

// 4. Exponential against the series, and periodicity.
Outcome exponential() {
  std::mt19937_64 rng(1004);
  double series = 0.0, period = 0.0;
  std::uniform_real_distribution<double> radius(0.1, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 v = draw_ball(rng, pi);
    series = std::max(series, oracle::entrywise_frobenius(
                                  expm_su2(v),
                                  oracle::taylor_expm(oracle::algebra_element(v.x, v.y, v.z), 25)));
    Vec3 d = draw_ball(rng, 1.0);
    while (norm(d) < 1e-3) d = draw_ball(rng, 1.0);
    const Vec3 u = (radius(rng) / norm(d)) * d;
    period = std::max(period, frobenius_distance(expm_su2(u),
                                                 expm_su2((1.0 + 2.0 * pi / norm(u)) * u)));
  }
  Outcome o;
  o.pass = series <= 1e-12 && period <= 1e-12;
  o.detail = "max series error " + sci(series) + ", max periodicity error " + sci(period);
  return o;
}

// 5. Merging never increases Q, barely moves the residual, and inverts splitting.
Outcome merging() {
  std::mt19937_64 rng(1005);
  int q_violations = 0;
  double drift = 0.0, inverse = 0.0;
  long q_raw_total = 0, q_total = 0;
  for (int i = 0; i < 1000; ++i) {
    const Mat2 s = haar_random(rng);
    const GeneratorPair p = draw_pair(rng);
    const Factorization res = factorize(s, p, kBounds[i % 5]);
    if (res.report.q > res.report.q_raw) ++q_violations;
    q_raw_total += res.report.q_raw;
    q_total += res.report.q;
    drift = std::max(drift, res.report.residual - res.report.residual_raw);
  }
  std::uniform_real_distribution<double> ua(1e-2, 5.0), ub(-5.0, 5.0), shrink(1e-2, 1.0);
  int not_single = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a = ua(rng), b = ub(rng);
    const double original = 1.001 * std::abs(b) + 1e-9;
    FactorSequence seq;
    seq.factors = split_for_bound(a, b, shrink(rng) * original);
    seq.bound_c = original;
    const auto back = merge_adjacent(seq).factors;
    if (back.size() != 1) {
      ++not_single;
      continue;
    }
    inverse = std::max({inverse, std::abs(back[0].a - a), std::abs(back[0].b - b)});
  }
  Outcome o;
  o.pass = q_violations == 0 && drift <= 1e-12 && not_single == 0 && inverse <= 1e-14;
  o.detail = "Q_merged > Q_raw on " + std::to_string(q_violations) +
             " trials (totals " + std::to_string(q_total) + "/" + std::to_string(q_raw_total) +
             "), max residual increase " + sci(drift) + ", split/merge error " + sci(inverse) +
             ", unrecovered " + std::to_string(not_single);
  return o;
}

// 6. Q nonincreasing in C.
Outcome monotone_bound() {
  std::mt19937_64 rng(1006);
  int violations = 0;
  std::string example;
  for (int i = 0; i < 20; ++i) {
    const Mat2 s = haar_random(rng);
    const GeneratorPair p = draw_pair(rng);
    std::size_t prev = SIZE_MAX;
    std::ostringstream qs;
    for (double c : {0.05, 0.1, 0.2, 0.4, 0.8}) {
      const std::size_t q = factorize(s, p, c).sequence.factors.size();
      qs << q << " ";
      if (q > prev) ++violations;
      prev = q;
    }
    if (i == 0) example = qs.str();
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " increases over 20 instances (first: Q = " +
             example + ")";
  return o;
}

// 7. CLI round trip and tamper detection.
Outcome cli_round_trip() {
  const fs::path dir = fs::temp_directory_path() / "su2fac_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::mt19937_64 rng(1007);
  int round_trip_ok = 0, o1_caught = 0, o2_caught = 0, tamperable = 0;
  std::ostringstream sink;
  for (int i = 0; i < 50; ++i) {
    io::Problem prob;
    prob.target = haar_random(rng);
    prob.pair = draw_pair(rng);
    prob.bound_c = kBounds[i % 5];
    const std::string in = (dir / ("p" + std::to_string(i) + ".json")).string();
    io::write_file_atomic(in, io::problem_to_json(prob));

    cli::FactorizeOptions opts;
    opts.csv = i % 2 == 1;
    opts.output = (dir / ("s" + std::to_string(i) + (opts.csv ? ".csv" : ".json"))).string();
    if (cli::cmd_factorize(in, opts, sink, sink) != cli::kOk) continue;
    if (cli::cmd_verify(in, *opts.output, std::nullopt, sink, sink) == cli::kOk) ++round_trip_ok;

    const io::Schedule sched = io::parse_schedule(io::read_file(*opts.output));
    if (sched.factors.empty()) continue;
    ++tamperable;
    const std::size_t k = static_cast<std::size_t>(i) % sched.factors.size();
    auto write = [&](const io::Schedule& s, const std::string& tag) {
      const std::string path = (dir / (tag + std::to_string(i))).string();
      io::write_file_atomic(path, opts.csv ? io::schedule_to_csv(s) : io::schedule_to_json(s));
      return path;
    };
    io::Schedule neg = sched;
    neg.factors[k].a = -neg.factors[k].a;
    if (cli::cmd_verify(in, write(neg, "neg"), std::nullopt, sink, sink) ==
        cli::kVerificationFailure)
      ++o1_caught;
    io::Schedule big = sched;
    big.factors[k].b = 2.0 * prob.bound_c;
    if (cli::cmd_verify(in, write(big, "big"), std::nullopt, sink, sink) ==
        cli::kVerificationFailure)
      ++o2_caught;
  }
  fs::remove_all(dir);
  Outcome o;
  o.pass = round_trip_ok == 50 && tamperable == 50 && o1_caught == 50 && o2_caught == 50;
  o.detail = "verified " + std::to_string(round_trip_ok) + "/50, negated a_k rejected " +
             std::to_string(o1_caught) + "/" + std::to_string(tamperable) +
             ", inflated b_k rejected " + std::to_string(o2_caught) + "/" +
             std::to_string(tamperable);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 end-to-end product contract (residual <= 1e-9, a_k > 0, |b_k| <= C, < 10 s)",
       end_to_end},
      {"2 canonical frame for arbitrary independent pairs (z <= 1e-10, |det mix| = |a x b|)",
       canonicalization},
      {"3 double cover, homomorphism <= 1e-12, lift round trip <= 1e-10", adjoint_map},
      {"4 closed-form exponential vs 25-term series and 2pi periodicity (<= 1e-12)",
       exponential},
      {"5 merging: Q_merged <= Q_raw, residual drift <= 1e-12, split/merge <= 1e-14", merging},
      {"6 Q nonincreasing in C over {0.05, 0.1, 0.2, 0.4, 0.8}", monotone_bound},
      {"7 CLI factorize -> verify round trip, tampered schedules exit 4", cli_round_trip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  criterion %s\n      %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
