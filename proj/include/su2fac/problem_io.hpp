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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "su2fac/factorize.hpp"

namespace su2fac::io {

/// Malformed input text: bad JSON/CSV, wrong shapes, missing fields.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed problem file.
///
///   {
///     "target":      [[[re, im], [re, im]], [[re, im], [re, im]]],
///     "generator_a": [x, y, z]  or a 2x2 complex matrix in su(2),
///     "generator_b": [x, y, z]  or a 2x2 complex matrix in su(2),
///     "bound_c":     0.1,
///     "tolerance":   1e-9          (optional)
///   }
struct Problem {
  std::optional<UnitaryGate> target;
  GeneratorPair pair;
  double bound_c = 0.0;
  double tolerance = kDefaultTolerance;
};

/// Throws FormatError on syntax/shape problems, and Error (NotUnitary,
/// NotInAlgebra, InvalidBound) when values fail validation. The target is
/// only mandatory when `require_target` is set.
Problem parse_problem(const std::string& text, bool require_target = true);
std::string problem_to_json(const Problem& problem);

struct Schedule {
  std::vector<Factor> factors;  // record k is factors[k - 1]
  double residual = 0.0;
  double bound_c = 0.0;
  double frame_angle = 0.0;
  UnitaryGate conjugator = UnitaryGate::identity();
};

Schedule make_schedule(const Factorization& result);

std::string schedule_to_json(const Schedule& schedule);

/// Comment lines carry the header, then `k,a_k,b_k` rows:
///   # Q=2
///   # residual=...
///   # bound_c=...
///   # frame_angle=...
///   # conjugator=re00,im00,re01,im01,re10,im10,re11,im11
///   k,a_k,b_k
///   1,0.5,0.05
std::string schedule_to_csv(const Schedule& schedule);

/// Accepts either format; JSON is recognized by a leading '{'.
Schedule parse_schedule(const std::string& text);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

std::string read_file(const std::string& path);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed write never leaves partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace su2fac::io
