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

#ifndef FAIRDIV_EF1_HPP_
#define FAIRDIV_EF1_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// A permutation of the agent ids, used as a pick order. Validated at
// construction; throws InputError otherwise.
class AgentOrdering {
 public:
  explicit AgentOrdering(std::vector<int> order);
  static AgentOrdering identity(int n_agents);

  int agent_count() const { return static_cast<int>(order_.size()); }
  int at(int position) const { return order_.at(static_cast<size_t>(position)); }
  const std::vector<int>& order() const { return order_; }

 private:
  std::vector<int> order_;
};

// Round-robin over `goods`: agents take turns in sigma order, each picking
// the good it values most among those still unallocated (smallest good id on
// value ties). Runs until every good in `goods` is taken, so bundle sizes
// along sigma differ by at most one, earlier agents holding the extra good.
//
// Output ordering guarantees, with s_p denoting the agent at sigma position
// p: s_p never envies s_q's bundle for p < q, and the whole result is EF1
// (for q < p, dropping s_q's first pick kills s_p's envy).
Allocation greedy_round_robin(const Instance& instance, const Bundle& goods,
                              const AgentOrdering& sigma);

// Snapshot handed to the observer after each category round.
struct Ef1Stage {
  int category;                   // index into the constraint structure
  std::vector<int> sigma;         // pick order used for this round
  Allocation merged;              // previous allocation plus this round
  Allocation after_elimination;   // merged, envy cycles rotated away
};
using Ef1Observer = std::function<void(const Ef1Stage&)>;

// Complete EF1 solver under category caps. Processes categories in index
// order; each round runs greedy_round_robin on the category's goods, merges
// the result into the running allocation, rotates envy cycles away and
// reorders agents by a topological sort of the remaining envy graph
// (enviers pick earlier next round). The final allocation is feasible
// (per-category bundle sizes never exceed ceil(|C_h| / n) <= k_h) and EF1.
//
// `initial` overrides the first round's pick order; defaults to identity.
// The observer, when set, fires once per category with the intermediate
// states (used by tests; production callers pass nothing).
Allocation ef1_allocate(const Instance& instance,
                        const CategoryStructure& constraints,
                        std::optional<AgentOrdering> initial = std::nullopt,
                        const Ef1Observer& observer = nullptr);

}  // namespace fairdiv

#endif  // FAIRDIV_EF1_HPP_
