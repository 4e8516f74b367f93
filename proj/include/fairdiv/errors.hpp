// Copyright 2026 The Authors.
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

#ifndef FAIRDIV_ERRORS_HPP_
#define FAIRDIV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fairdiv {

// Base class for every error raised by the library. The CLI maps each
// subclass to a distinct process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or contract-violating caller input: bad documents, unknown good
// names, non-permutation orderings, negative values, incomplete allocations.
class InputError : public Error {
 public:
  using Error::Error;
};

// An enumeration exceeded its configured budget. Distinct from an empty
// result: the search was cut off, nothing is known about the remainder.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// The constraint structure admits no complete feasible allocation (category
// cap below the occupancy floor, or a matroid that cannot cover the ground
// set with the requested number of independent bundles).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed: a guaranteed exchange partner is missing, an
// iteration tripwire fired, a topological sort received a cyclic graph.
// Indicates a bug in this library or a broken user-supplied oracle.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ERRORS_HPP_
