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

#ifndef FAIRDIV_ENUMERATE_HPP_
#define FAIRDIV_ENUMERATE_HPP_

#include <cstdint>
#include <functional>

#include "fairdiv/instance.hpp"

namespace fairdiv {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Visits every complete feasible allocation exactly once, in lexicographic
// order of the good -> agent assignment vector. The visitor returns false to
// stop early (that is a normal, non-error exit). Throws BudgetError once more
// than `limit` allocations would be yielded. Returns true when the space was
// exhausted, false when the visitor stopped the walk.
//
// Cap pruning is exact: every cap-respecting prefix extends to a complete
// feasible allocation, so the walk touches O(n_goods * yielded) nodes.
bool enumerate_feasible(const Instance& instance,
                        const CategoryStructure& constraints,
                        std::uint64_t limit,
                        const std::function<bool(const Allocation&)>& visit);

}  // namespace fairdiv

#endif  // FAIRDIV_ENUMERATE_HPP_
