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

#include <stdexcept>
#include <string>
#include <string_view>

namespace su2fac {

enum class ErrorKind {
  NotInAlgebra,
  NotUnitary,
  NotARotation,
  DependentGenerators,
  SingularMixing,
  DegenerateDirection,
  NoViableFrame,
  InvalidBound,
  ResidualExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Raised by every library operation that rejects its input or cannot meet
/// its postcondition. The kind is stable and is what callers dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace su2fac
