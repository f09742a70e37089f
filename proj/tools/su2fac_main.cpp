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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "su2fac/cli.hpp"

int main(int argc, char** argv) {
  using namespace su2fac::cli;

  CLI::App app{"Factorize SU(2) targets into bounded exponentials of two generators"};
  app.require_subcommand(1);

  std::string input;
  std::string schedule;
  std::string output;
  bool csv = false;
  double tol = 0.0;
  int trials = 100;
  std::uint64_t seed = 1;

  auto* factorize = app.add_subcommand("factorize", "Write a factor schedule for a problem file");
  factorize->add_option("input", input, "Problem file (JSON)")->required();
  factorize->add_option("--output,-o", output, "Schedule path (stdout when omitted)");
  factorize->add_flag("--csv", csv, "Write CSV instead of JSON");
  auto* factorize_tol = factorize->add_option("--tol", tol, "Residual tolerance override");

  auto* verify = app.add_subcommand("verify", "Check a schedule against its problem file");
  verify->add_option("input", input, "Problem file (JSON)")->required();
  verify->add_option("schedule", schedule, "Schedule file (JSON or CSV)")->required();
  auto* verify_tol = verify->add_option("--tol", tol, "Residual tolerance override");

  auto* canonicalize = app.add_subcommand("canonicalize", "Print the canonical frame of a generator pair");
  canonicalize->add_option("input", input, "Problem file (JSON)")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");
  selftest->add_option("--trials", trials, "Trials per suite");
  selftest->add_option("--seed", seed, "Random seed");

  auto* bench = app.add_subcommand("bench", "Time random factorizations");
  bench->add_option("--trials", trials, "Number of factorizations");
  bench->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  if (factorize->parsed()) {
    FactorizeOptions opts;
    if (!output.empty()) opts.output = output;
    opts.csv = csv;
    if (factorize_tol->count() > 0) opts.tol = tol;
    return cmd_factorize(input, opts, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    std::optional<double> override_tol;
    if (verify_tol->count() > 0) override_tol = tol;
    return cmd_verify(input, schedule, override_tol, std::cout, std::cerr);
  }
  if (canonicalize->parsed()) return cmd_canonicalize(input, std::cout, std::cerr);
  if (selftest->parsed()) return cmd_selftest(trials, seed, std::cout, std::cerr);
  if (bench->parsed()) return cmd_bench(trials, seed, std::cout, std::cerr);
  return kBadInput;
}
