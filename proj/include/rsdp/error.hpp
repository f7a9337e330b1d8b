// Copyright 2026 The RSDP Authors
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

namespace rsdp {

// Raised when a computation cannot be completed at the configured scale or
// precision (exact-cover caps, LP non-convergence, universe size caps).
// Argument/shape violations use std::invalid_argument instead.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the budget ledger when a spend request would exceed the limit.
class BudgetExhaustedError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

}  // namespace rsdp
