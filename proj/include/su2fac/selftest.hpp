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
#include <random>
#include <string>
#include <vector>

#include "su2fac/canonical.hpp"

namespace su2fac {

/// Components uniform in [lo, hi].
Vec3 random_vec(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0);

/// Pair with components uniform in [-1, 1], resampled until
/// |alpha × beta| >= 1e-3 |alpha| |beta|.
GeneratorPair random_independent_pair(std::mt19937_64& rng);

/// Same, with both generators already in the xy plane.
GeneratorPair random_planar_pair(std::mt19937_64& rng);

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string first_failure;  // empty when every check passed

  bool ok() const { return passed == total; }
};

/// Runs the property suites of every module. Deterministic in (trials, seed).
std::vector<SuiteResult> run_selftest(int trials, std::uint64_t seed);

/// One line per suite, then a summary line.
std::string format_selftest(const std::vector<SuiteResult>& suites);

}  // namespace su2fac
