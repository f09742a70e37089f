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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace su2fac::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kBadInput = 2,
  kDependentGenerators = 3,
  kVerificationFailure = 4,
};

struct FactorizeOptions {
  std::optional<std::string> output;  // stdout when unset
  bool csv = false;
  std::optional<double> tol;          // overrides the problem's tolerance
};

int cmd_factorize(const std::string& input_path, const FactorizeOptions& opts,
                  std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& input_path, const std::string& schedule_path,
               std::optional<double> tol, std::ostream& out, std::ostream& err);

/// Prints V, R and the mixing matrix for the problem's generator pair.
int cmd_canonicalize(const std::string& input_path, std::ostream& out,
                     std::ostream& err);

int cmd_selftest(int trials, std::uint64_t seed, std::ostream& out,
                 std::ostream& err);

int cmd_bench(int trials, std::uint64_t seed, std::ostream& out,
              std::ostream& err);

}  // namespace su2fac::cli
