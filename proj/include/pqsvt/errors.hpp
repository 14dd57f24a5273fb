// Copyright 2026 The pqsvt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pqsvt {

// Preconditions and malformed inputs raise std::invalid_argument. The two
// types below cover failures of the numerics themselves.

// An iterative method stopped without reaching its tolerance.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

// No admissible answer exists within the search bounds.
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace pqsvt
