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

#ifndef FAIRDIV_FAIRNESS_HPP_
#define FAIRDIV_FAIRNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/enumerate.hpp"
#include "fairdiv/instance.hpp"

namespace fairdiv {

// The three pairwise envy relaxations, ordered by strength:
//   Efx implies Efl implies Ef1.
//
// For an ordered agent pair (i, j) with bundles A_i, A_j under i's values:
//   Ef1  holds when A_j is empty or some g in A_j has
//        v_i(A_i) >= v_i(A_j) - v_i(g).
//   Efx  holds when for EVERY g in A_j with v_i(g) > 0,
//        v_i(A_i) >= v_i(A_j) - v_i(g).
//   Efl  holds when A_j contains at most one positively valued good, or some
//        g in A_j has both v_i(A_i) >= v_i(A_j) - v_i(g) and
//        v_i(A_i) >= v_i(g).
enum class FairnessProperty { kEf1, kEfx, kEfl };

std::string property_name(FairnessProperty property);

// One failing ordered pair. `witness_good` and `margin` pin the failure down:
//   Ef1: witness is the good in A_j most valued by the envier (min-id on
//        ties); margin = v_i(A_j \ witness) - v_i(A_i) > 0, the envy that
//        survives the best single removal.
//   Efx: witness is the positively valued good in A_j least valued by the
//        envier (min-id on ties); margin = v_i(A_j \ witness) - v_i(A_i) > 0,
//        the largest envy any permitted removal leaves behind.
//   Efl: witness is the good minimizing
//        max(v_i(A_j \ g) - v_i(A_i), v_i(g) - v_i(A_i)) (min-id on ties) and
//        margin is that minimum, which is positive exactly when no single
//        good satisfies both clause conditions.
struct Violation {
  int envier;
  int envied;
  std::optional<int> witness_good;
  Rational margin;
};

struct FairnessReport {
  FairnessProperty property;
  bool holds;
  std::vector<Violation> violations;  // ordered by (envier, envied)
};

// Evaluates a property on any disjoint allocation, complete or partial.
// Solver instrumentation checks intermediate states through this entry.
FairnessReport evaluate_property(const Instance& instance,
                                 const Allocation& allocation,
                                 FairnessProperty property);

// Complete-allocation wrappers; throw InputError when the allocation is not
// a complete disjoint partition of the instance's goods.
FairnessReport check_ef1(const Instance& instance, const Allocation& allocation);
FairnessReport check_efx(const Instance& instance, const Allocation& allocation);
FairnessReport check_efl(const Instance& instance, const Allocation& allocation);

// Exact product of own-bundle values. Order-equivalent to the geometric
// mean, so argmax comparisons are safe; the n-th root is never taken.
Rational nash_welfare_product(const Instance& instance, const Allocation& allocation);

// First feasible allocation (in enumeration order) satisfying the property,
// or nullopt when none exists. Propagates BudgetError from the walk.
std::optional<Allocation> find_allocation_with(
    const Instance& instance, const CategoryStructure& constraints,
    FairnessProperty property,
    std::uint64_t limit = kDefaultEnumerationBudget);

// Own-bundle value divided by the agent's maximin share. A zero share makes
// the requirement vacuous: the ratio is reported as nullopt (read: infinite)
// and excluded from the minimum. `min_ratio` is nullopt when every agent is
// vacuous.
struct MmsRatioReport {
  std::vector<std::optional<Rational>> per_agent;
  std::optional<Rational> min_ratio;
};

// `shares[i]` is agent i's maximin share (exact or a lower bound; the caller
// knows which). Throws InputError when the allocation is incomplete or
// violates the constraints, or when `shares` has the wrong length.
MmsRatioReport verify_alpha_mms(const Instance& instance,
                                const CategoryStructure& constraints,
                                const Allocation& allocation,
                                const std::vector<Rational>& shares);

}  // namespace fairdiv

#endif  // FAIRDIV_FAIRNESS_HPP_
