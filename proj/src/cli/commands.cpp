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

#include "su2fac/cli.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>

#include <json.hpp>

#include "su2fac/error.hpp"
#include "su2fac/factorize.hpp"
#include "su2fac/problem_io.hpp"
#include "su2fac/selftest.hpp"

namespace su2fac::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DependentGenerators:
      return kDependentGenerators;
    case ErrorKind::NotInAlgebra:
    case ErrorKind::NotUnitary:
    case ErrorKind::NotARotation:
    case ErrorKind::InvalidBound:
      return kBadInput;
    case ErrorKind::SingularMixing:
    case ErrorKind::DegenerateDirection:
    case ErrorKind::NoViableFrame:
    case ErrorKind::ResidualExceeded:
      return kVerificationFailure;
  }
  return kVerificationFailure;
}

// Runs `body`, translating library and format errors into exit codes with a
// one-line message on `err`.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

bool resolve_tolerance(std::optional<double> override_tol, double file_tol,
                       double& tol, std::ostream& err) {
  tol = override_tol.value_or(file_tol);
  if (!(std::isfinite(tol) && tol > 0.0)) {
    err << "error: tolerance must be positive\n";
    return false;
  }
  return true;
}

nlohmann::json rotation_json(const Rotation3& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({r(i, 0), r(i, 1), r(i, 2)});
  return rows;
}

nlohmann::json gate_json(const Mat2& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int cmd_factorize(const std::string& input_path, const FactorizeOptions& opts,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::Problem problem = io::parse_problem(io::read_file(input_path));
    double tol = 0.0;
    if (!resolve_tolerance(opts.tol, problem.tolerance, tol, err))
      return static_cast<int>(kBadInput);

    const Factorization result =
        factorize(*problem.target, problem.pair, problem.bound_c, tol);
    const io::Schedule schedule = io::make_schedule(result);
    const std::string text = opts.csv ? io::schedule_to_csv(schedule)
                                      : io::schedule_to_json(schedule);

    std::ostream& summary = opts.output ? out : err;
    if (opts.output) {
      io::write_file_atomic(*opts.output, text);
    } else {
      out << text;
    }
    summary << "Q=" << result.report.q << " (before merging " << result.report.q_raw
            << ") residual=" << io::format_double(result.report.residual) << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& input_path, const std::string& schedule_path,
               std::optional<double> tol_override, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const io::Problem problem = io::parse_problem(io::read_file(input_path));
    const io::Schedule schedule =
        io::parse_schedule(io::read_file(schedule_path));
    double tol = 0.0;
    if (!resolve_tolerance(tol_override, problem.tolerance, tol, err))
      return static_cast<int>(kBadInput);

    bool ok = true;
    for (std::size_t k = 0; k < schedule.factors.size(); ++k) {
      const Factor& f = schedule.factors[k];
      if (!(f.a > 0.0)) {
        err << "O1 violated at k=" << k + 1 << ": a=" << io::format_double(f.a)
            << "\n";
        ok = false;
      }
      if (!(std::abs(f.b) <= problem.bound_c)) {
        err << "O2 violated at k=" << k + 1 << ": |b|=" << io::format_double(std::abs(f.b))
            << " > C=" << io::format_double(problem.bound_c) << "\n";
        ok = false;
      }
    }
    const double residual =
        verify(*problem.target, problem.pair, schedule.factors);
    out << "Q=" << schedule.factors.size()
        << " residual=" << io::format_double(residual) << "\n";
    if (!(residual <= tol)) {
      err << "residual " << io::format_double(residual) << " exceeds tolerance "
          << io::format_double(tol) << "\n";
      ok = false;
    }
    return static_cast<int>(ok ? kOk : kVerificationFailure);
  });
}

int cmd_canonicalize(const std::string& input_path, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const io::Problem problem =
        io::parse_problem(io::read_file(input_path), /*require_target=*/false);
    const CanonicalFrame f = canonicalize(problem.pair);
    nlohmann::json j;
    j["conjugator"] = gate_json(f.conjugator);
    j["rotation"] = rotation_json(f.rotation);
    j["alpha_c"] = {f.alpha_c.x, f.alpha_c.y, f.alpha_c.z};
    j["beta_c"] = {f.beta_c.x, f.beta_c.y, f.beta_c.z};
    j["mix"] = {{f.mix.a, f.mix.c}, {f.mix.b, f.mix.d}};
    out << j.dump(2) << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_selftest(int trials, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
  if (trials < 1) {
    err << "error: --trials must be at least 1\n";
    return kBadInput;
  }
  const auto suites = run_selftest(trials, seed);
  out << format_selftest(suites);
  for (const auto& s : suites)
    if (!s.ok()) return kPropertyFailure;
  return kOk;
}

int cmd_bench(int trials, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  if (trials < 1) {
    err << "error: --trials must be at least 1\n";
    return kBadInput;
  }
  return guarded(err, [&] {
    const double bounds[] = {0.05, 0.1, 0.5, 1.0, 2.0};
    std::mt19937_64 rng(seed);
    long total_q = 0;
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < trials; ++i) {
      const UnitaryGate s = haar_random(rng);
      const GeneratorPair p = random_independent_pair(rng);
      total_q += factorize(s, p, bounds[i % 5]).report.q;
    }
    const std::chrono::duration<double, std::micro> elapsed =
        std::chrono::steady_clock::now() - start;
    out << std::fixed << std::setprecision(2) << "factorizations: " << trials
        << "\nmean Q: " << static_cast<double>(total_q) / trials
        << "\nmean time: " << elapsed.count() / trials << " us\n";
    return static_cast<int>(kOk);
  });
}

}  // namespace su2fac::cli
