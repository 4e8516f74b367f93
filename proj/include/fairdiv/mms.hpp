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

#ifndef FAIRDIV_MMS_HPP_
#define FAIRDIV_MMS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairdiv/capped_valuation.hpp"
#include "fairdiv/enumerate.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// Agent's constrained maximin share: the best min-bundle value the agent
// could secure by partitioning all goods itself into n cap-feasible bundles
// and keeping the worst one. Exact brute force over unordered partitions
// (good-by-good assignment, cap pruning, canonical symmetry breaking).
// Throws BudgetError when the search exceeds `limit` explored leaves.
Rational cmms_exact(const Instance& instance, const CategoryStructure& constraints,
                    int agent, std::uint64_t limit = kDefaultEnumerationBudget);

// Feasible lower bound on the maximin share: clone agent's values onto all
// n agents and run the category-round EF1 solver; the worst bundle of that
// feasible allocation is a partition the agent could have chosen itself.
Rational cmms_lower_bound(const Instance& instance,
                          const CategoryStructure& constraints, int agent);

// Round-robin bag filling on the cap-aware proxy valuations: agents 0..n-1
// take turns; on its turn an agent grabs the unallocated good with the
// largest marginal proxy gain (smallest good id on ties). Every good is
// handed out; the result ignores caps by design and is repaired afterwards.
// `proxies[i]` must be agent i's CappedValuation.
Allocation greedy_proxy_split(const Instance& instance,
                              const std::vector<CappedValuation>& proxies);

// One cap-repair move: `good` left bundle `from` for bundle `to`.
struct RepairStep {
  int from;
  int to;
  int good;
  int category;
};
using RepairObserver = std::function<void(const RepairStep&, const Allocation&)>;

// Shuffles goods of overfull categories into bundles with spare room until
// the allocation is cap-feasible. Each move takes, from the lowest-id
// overfull (bundle, category) pair, the good its holder values least
// (min-id ties) and hands it to the lowest-id bundle with room. The moved
// good never counts toward its holder's capped top-k, so no bundle's proxy
// value decreases, and the total cap excess drops by one per move.
Allocation repair_to_feasible(const Instance& instance,
                              const CategoryStructure& constraints,
                              Allocation allocation,
                              const RepairObserver& observer = nullptr);

enum class ShareMode { kExact, kLowerBound };

struct MmsOutcome {
  Allocation allocation;
  ShareMode mode;                 // how `shares` was computed
  std::vector<Rational> shares;   // per-agent maximin share (or lower bound)
  MmsRatioReport ratios;          // own value / share, nullopt when share is 0
};

// Full approximate-maximin pipeline: greedy_proxy_split on the proxy
// valuations, repair_to_feasible, then per-agent share ratios. With
// `forced` empty the shares come from cmms_exact when the brute force fits
// in `limit`, falling back to cmms_lower_bound otherwise; forcing kExact
// propagates BudgetError instead of falling back.
MmsOutcome approx_mms_allocate(const Instance& instance,
                               const CategoryStructure& constraints,
                               std::optional<ShareMode> forced = std::nullopt,
                               std::uint64_t limit = kDefaultEnumerationBudget);

}  // namespace fairdiv

#endif  // FAIRDIV_MMS_HPP_
