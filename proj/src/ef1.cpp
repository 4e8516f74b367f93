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

#include "fairdiv/ef1.hpp"

#include <utility>

#include "fairdiv/envy_graph.hpp"
#include "fairdiv/errors.hpp"

namespace fairdiv {

AgentOrdering::AgentOrdering(std::vector<int> order) : order_(std::move(order)) {
  if (order_.empty()) throw InputError("empty agent ordering");
  std::vector<bool> seen(order_.size(), false);
  for (int agent : order_) {
    if (agent < 0 || agent >= static_cast<int>(order_.size()) ||
        seen[static_cast<size_t>(agent)]) {
      throw InputError("agent ordering is not a permutation");
    }
    seen[static_cast<size_t>(agent)] = true;
  }
}

AgentOrdering AgentOrdering::identity(int n_agents) {
  std::vector<int> order(static_cast<size_t>(n_agents));
  for (int i = 0; i < n_agents; ++i) order[static_cast<size_t>(i)] = i;
  return AgentOrdering(std::move(order));
}

Allocation greedy_round_robin(const Instance& instance, const Bundle& goods,
                              const AgentOrdering& sigma) {
  if (sigma.agent_count() != instance.agent_count()) {
    throw InputError("ordering sized for a different instance");
  }
  if (!is_sorted_unique(goods)) {
    throw InputError("good set must be strictly increasing");
  }
  for (int g : goods) {
    if (g < 0 || g >= instance.good_count()) {
      throw InputError("good id out of range");
    }
  }

  Allocation allocation = Allocation::empty(instance.agent_count());
  std::vector<bool> taken(goods.size(), false);
  const int n = instance.agent_count();
  for (size_t turn = 0; turn < goods.size(); ++turn) {
    const int agent = sigma.at(static_cast<int>(turn) % n);
    int best = -1;
    for (size_t k = 0; k < goods.size(); ++k) {
      if (taken[k]) continue;
      if (best == -1 ||
          instance.value(agent, goods[k]) > instance.value(agent, goods[best])) {
        best = static_cast<int>(k);  // strict: value ties keep the low id
      }
    }
    taken[static_cast<size_t>(best)] = true;
    bundle_insert(allocation.bundles[static_cast<size_t>(agent)],
                  goods[static_cast<size_t>(best)]);
  }
  return allocation;
}

Allocation ef1_allocate(const Instance& instance,
                        const CategoryStructure& constraints,
                        std::optional<AgentOrdering> initial,
                        const Ef1Observer& observer) {
  if (constraints.good_count() != instance.good_count() ||
      constraints.agent_count() != instance.agent_count()) {
    throw InputError("constraints sized for a different instance");
  }
  if (initial && initial->agent_count() != instance.agent_count()) {
    throw InputError("initial ordering sized for a different instance");
  }

  AgentOrdering sigma =
      initial ? *initial : AgentOrdering::identity(instance.agent_count());
  Allocation running = Allocation::empty(instance.agent_count());

  for (int h = 0; h < constraints.category_count(); ++h) {
    // One round-robin pass hands every agent at most ceil(|C_h| / n) goods
    // of this category, which the construction floor keeps within the cap.
    const Allocation round =
        greedy_round_robin(instance, constraints.category(h), sigma);
    Allocation merged = running;
    for (size_t i = 0; i < merged.bundles.size(); ++i) {
      merged.bundles[i] = bundle_union(merged.bundles[i], round.bundles[i]);
    }
    Allocation fixed = eliminate_envy_cycles(instance, merged);
    if (observer) observer(Ef1Stage{h, sigma.order(), merged, fixed});
    running = std::move(fixed);
    // Enviers pick before the agents they envy in the next round; that is
    // what keeps the merged allocation EF1 from round to round.
    sigma = AgentOrdering(topological_order(build_envy_graph(instance, running)));
  }
  return running;
}

}  // namespace fairdiv
