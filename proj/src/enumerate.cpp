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

#include "fairdiv/enumerate.hpp"

#include <vector>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

struct Walk {
  const CategoryStructure& constraints;
  const std::function<bool(const Allocation&)>& visit;
  std::uint64_t limit;
  int n_agents;
  int n_goods;

  Allocation current;
  std::vector<std::vector<int>> used;  // agent x category occupancy
  std::uint64_t yielded = 0;

  // Returns false when the visitor asked to stop.
  bool descend(int good) {
    if (good == n_goods) {
      if (yielded == limit) {
        throw BudgetError("enumeration budget of " + std::to_string(limit) +
                          " allocations exhausted");
      }
      ++yielded;
      return visit(current);
    }
    const int h = constraints.category_of(good);
    const int cap = constraints.cap(h);
    for (int agent = 0; agent < n_agents; ++agent) {
      auto& occupancy = used[static_cast<size_t>(agent)][static_cast<size_t>(h)];
      if (occupancy == cap) continue;
      // The construction-time floor guarantees n * cap >= |C_h|, so any
      // cap-respecting prefix still extends: no further lookahead needed.
      ++occupancy;
      current.bundles[static_cast<size_t>(agent)].push_back(good);
      const bool keep_going = descend(good + 1);
      current.bundles[static_cast<size_t>(agent)].pop_back();
      --occupancy;
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

bool enumerate_feasible(const Instance& instance,
                        const CategoryStructure& constraints,
                        std::uint64_t limit,
                        const std::function<bool(const Allocation&)>& visit) {
  if (constraints.good_count() != instance.good_count() ||
      constraints.agent_count() != instance.agent_count()) {
    throw InputError("constraints sized for a different instance");
  }
  Walk walk{constraints,
            visit,
            limit,
            instance.agent_count(),
            instance.good_count(),
            Allocation::empty(instance.agent_count()),
            std::vector<std::vector<int>>(
                static_cast<size_t>(instance.agent_count()),
                std::vector<int>(
                    static_cast<size_t>(constraints.category_count()), 0)),
            0};
  return walk.descend(0);
}

}  // namespace fairdiv
