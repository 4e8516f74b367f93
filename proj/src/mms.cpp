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

#include "fairdiv/mms.hpp"

#include <algorithm>
#include <utility>

#include "fairdiv/ef1.hpp"
#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

// Brute-force maximin search state. Bundles are anonymous, so partitions are
// explored in canonical form: a good may only open the lowest unopened
// bundle, which cuts the n!-fold relabeling symmetry.
struct ShareSearch {
  const Instance& instance;
  const CategoryStructure& constraints;
  int agent;
  std::uint64_t limit;

  int n;
  std::vector<Rational> bundle_value;       // per bundle
  std::vector<std::vector<int>> occupancy;  // bundle x category
  std::uint64_t leaves = 0;
  Rational best = -1;

  void descend(int good, int used) {
    if (good == instance.good_count()) {
      if (leaves == limit) {
        throw BudgetError("maximin search budget of " + std::to_string(limit) +
                          " partitions exhausted");
      }
      ++leaves;
      Rational worst = 0;  // any unopened bundle is empty
      if (used == n) {
        worst = bundle_value[0];
        for (int b = 1; b < n; ++b) {
          worst = std::min(worst, bundle_value[static_cast<size_t>(b)]);
        }
      }
      best = std::max(best, worst);
      return;
    }
    const int h = constraints.category_of(good);
    const int cap = constraints.cap(h);
    const int reachable = std::min(used + 1, n);
    for (int b = 0; b < reachable; ++b) {
      auto& count = occupancy[static_cast<size_t>(b)][static_cast<size_t>(h)];
      if (count == cap) continue;
      ++count;
      bundle_value[static_cast<size_t>(b)] += instance.value(agent, good);
      descend(good + 1, std::max(used, b + 1));
      bundle_value[static_cast<size_t>(b)] -= instance.value(agent, good);
      --count;
    }
  }
};

void validate_pair(const Instance& instance,
                   const CategoryStructure& constraints) {
  if (constraints.good_count() != instance.good_count() ||
      constraints.agent_count() != instance.agent_count()) {
    throw InputError("constraints sized for a different instance");
  }
}

void validate_allocation(const Instance& instance,
                         const Allocation& allocation) {
  if (allocation.agent_count() != instance.agent_count()) {
    throw InputError("allocation has the wrong number of bundles");
  }
  if (!allocation.is_disjoint()) throw InputError("allocation bundles overlap");
  for (const Bundle& bundle : allocation.bundles) {
    for (int g : bundle) {
      if (g < 0 || g >= instance.good_count()) {
        throw InputError("allocated good id out of range");
      }
    }
  }
}

}  // namespace

Rational cmms_exact(const Instance& instance,
                    const CategoryStructure& constraints, int agent,
                    std::uint64_t limit) {
  validate_pair(instance, constraints);
  if (agent < 0 || agent >= instance.agent_count()) {
    throw InputError("agent id out of range");
  }
  ShareSearch search{
      instance,
      constraints,
      agent,
      limit,
      instance.agent_count(),
      std::vector<Rational>(static_cast<size_t>(instance.agent_count()), 0),
      std::vector<std::vector<int>>(
          static_cast<size_t>(instance.agent_count()),
          std::vector<int>(static_cast<size_t>(constraints.category_count()),
                           0)),
      0,
      -1};
  search.descend(0, 0);
  // The construction floor guarantees at least one feasible partition.
  if (search.best < 0) {
    throw InternalError("maximin search found no feasible partition");
  }
  return search.best;
}

Rational cmms_lower_bound(const Instance& instance,
                          const CategoryStructure& constraints, int agent) {
  validate_pair(instance, constraints);
  if (agent < 0 || agent >= instance.agent_count()) {
    throw InputError("agent id out of range");
  }
  // Hand the agent's own valuation to everybody and split fairly; the worst
  // bundle of that feasible split is a partition the agent could have
  // chosen, hence a true lower bound on its maximin share.
  std::vector<Rational> row(static_cast<size_t>(instance.good_count()));
  for (int g = 0; g < instance.good_count(); ++g) {
    row[static_cast<size_t>(g)] = instance.value(agent, g);
  }
  const Instance cloned(
      instance.agent_count(), instance.good_count(),
      std::vector<std::vector<Rational>>(
          static_cast<size_t>(instance.agent_count()), row));
  const Allocation split = ef1_allocate(cloned, constraints);
  Rational worst = instance.bundle_value(agent, split.bundles[0]);
  for (size_t b = 1; b < split.bundles.size(); ++b) {
    worst = std::min(worst, instance.bundle_value(agent, split.bundles[b]));
  }
  return worst;
}

Allocation greedy_proxy_split(const Instance& instance,
                              const std::vector<CappedValuation>& proxies) {
  if (proxies.size() != static_cast<size_t>(instance.agent_count())) {
    throw InputError("one proxy valuation per agent required");
  }
  for (size_t i = 0; i < proxies.size(); ++i) {
    if (proxies[i].agent() != static_cast<int>(i)) {
      throw InputError("proxy valuations out of order");
    }
  }

  Allocation allocation = Allocation::empty(instance.agent_count());
  std::vector<bool> taken(static_cast<size_t>(instance.good_count()), false);
  const int n = instance.agent_count();
  for (int turn = 0; turn < instance.good_count(); ++turn) {
    const int agent = turn % n;
    const Bundle& bundle = allocation.bundles[static_cast<size_t>(agent)];
    int best = -1;
    Rational best_gain;
    for (int g = 0; g < instance.good_count(); ++g) {
      if (taken[static_cast<size_t>(g)]) continue;
      const Rational gain = proxies[static_cast<size_t>(agent)].marginal_gain(
          bundle, g);
      if (best == -1 || gain > best_gain) {
        best = g;
        best_gain = gain;
      }
    }
    taken[static_cast<size_t>(best)] = true;
    bundle_insert(allocation.bundles[static_cast<size_t>(agent)], best);
  }
  return allocation;
}

Allocation repair_to_feasible(const Instance& instance,
                              const CategoryStructure& constraints,
                              Allocation allocation,
                              const RepairObserver& observer) {
  validate_pair(instance, constraints);
  validate_allocation(instance, allocation);

  // Every move drains one unit of cap excess, so the good count bounds the
  // loop; the slack only guards against a broken step.
  const int max_moves = instance.good_count() + 8;
  for (int move = 0; move <= max_moves; ++move) {
    const auto violation = find_cap_violation(allocation, constraints);
    if (!violation) return allocation;
    const int holder = violation->agent;
    const int h = violation->category;
    const Bundle inside = bundle_intersect(
        allocation.bundles[static_cast<size_t>(holder)],
        constraints.category(h));

    // The holder's least valued good there sits outside its capped top-k,
    // so losing it never lowers the holder's proxy value.
    int good = inside.front();
    for (int g : inside) {
      if (instance.value(holder, g) < instance.value(holder, good)) good = g;
    }

    int receiver = -1;
    for (int i = 0; i < instance.agent_count() && receiver == -1; ++i) {
      if (i == holder) continue;
      const Bundle held = bundle_intersect(
          allocation.bundles[static_cast<size_t>(i)], constraints.category(h));
      if (static_cast<int>(held.size()) < constraints.cap(h)) receiver = i;
    }
    if (receiver == -1) {
      // The floor k_h >= ceil(|C_h| / n) makes room somewhere whenever a
      // bundle runs over.
      throw InternalError("cap repair found no bundle with room");
    }

    bundle_erase(allocation.bundles[static_cast<size_t>(holder)], good);
    bundle_insert(allocation.bundles[static_cast<size_t>(receiver)], good);
    if (observer) {
      observer(RepairStep{holder, receiver, good, h}, allocation);
    }
  }
  throw InternalError("cap repair failed to converge");
}

MmsOutcome approx_mms_allocate(const Instance& instance,
                               const CategoryStructure& constraints,
                               std::optional<ShareMode> forced,
                               std::uint64_t limit) {
  validate_pair(instance, constraints);

  std::vector<CappedValuation> proxies;
  proxies.reserve(static_cast<size_t>(instance.agent_count()));
  for (int i = 0; i < instance.agent_count(); ++i) {
    proxies.emplace_back(instance, constraints, i);
  }
  Allocation allocation = repair_to_feasible(
      instance, constraints, greedy_proxy_split(instance, proxies));

  MmsOutcome outcome;
  outcome.allocation = std::move(allocation);
  outcome.mode = forced.value_or(ShareMode::kExact);
  outcome.shares.reserve(static_cast<size_t>(instance.agent_count()));

  if (outcome.mode == ShareMode::kExact) {
    try {
      for (int i = 0; i < instance.agent_count(); ++i) {
        outcome.shares.push_back(cmms_exact(instance, constraints, i, limit));
      }
    } catch (const BudgetError&) {
      if (forced) throw;  // the caller insisted on exact shares
      outcome.mode = ShareMode::kLowerBound;
      outcome.shares.clear();
    }
  }
  if (outcome.mode == ShareMode::kLowerBound && outcome.shares.empty()) {
    for (int i = 0; i < instance.agent_count(); ++i) {
      outcome.shares.push_back(cmms_lower_bound(instance, constraints, i));
    }
  }

  outcome.ratios =
      verify_alpha_mms(instance, constraints, outcome.allocation, outcome.shares);
  return outcome;
}

}  // namespace fairdiv
