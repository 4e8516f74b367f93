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

#ifndef FAIRDIV_IO_HPP_
#define FAIRDIV_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/fairness.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/mms.hpp"

namespace fairdiv {

// Instance document:
//   {
//     "agents": 2,
//     "goods": ["g1", "g2", "g3", "g4"],
//     "values": [[50, 1, 1, 1], [50, 1, 1, 1]],
//     "categories": [{"goods": ["g1", "g2", "g3", "g4"], "cap": 2}]
//   }
// Values are JSON integers, decimal strings ("12.75") or fraction strings
// ("1/3"); non-integer JSON numbers are rejected to keep arithmetic exact.
// "categories" may be omitted for an unconstrained instance. Categories must partition the good
// set; caps below ceil(|C_h| / agents) raise InfeasibleError, every other
// defect raises InputError.
struct ParsedInstance {
  Instance instance;
  CategoryStructure constraints;
  std::vector<std::string> good_names;
};

ParsedInstance parse_instance(const std::string& text);

// Inverse of parse_instance, byte-deterministic. Values with denominator 1
// that fit a 64-bit integer are emitted as numbers; everything else becomes
// an exact decimal string when one exists and a fraction string otherwise.
// parse(emit(parse(x))) structurally equals parse(x).
std::string emit_instance(const ParsedInstance& parsed);

// Allocation document: {"bundles": [["g1", "g2"], ["g3", "g4"]]}. Bundle
// count must equal n_agents; names must be known and mentioned at most
// once. Completeness is checked by the consuming command, not here.
Allocation parse_allocation(const std::string& text,
                            const std::vector<std::string>& good_names,
                            int n_agents);

// Compact single-line form of one allocation, for streaming enumeration.
std::string allocation_to_json_line(const Allocation& allocation,
                                    const std::vector<std::string>& good_names);

struct MmsSection {
  ShareMode mode;
  std::vector<Rational> shares;
  MmsRatioReport ratios;
};

// Pieces a command wants in its result document; absent members are left
// out entirely. Key order is fixed, output is byte-deterministic.
struct ResultParts {
  std::optional<Allocation> allocation;
  std::optional<std::vector<Rational>> agent_values;
  std::optional<bool> feasible;
  std::optional<CapViolation> cap_violation;
  std::optional<bool> independent;            // matroid-constrained solves
  std::vector<FairnessReport> reports;
  std::optional<Rational> nash_welfare;
  std::optional<MmsSection> mms;
};

std::string emit_result(const ResultParts& parts,
                        const std::vector<std::string>& good_names);

}  // namespace fairdiv

#endif  // FAIRDIV_IO_HPP_
