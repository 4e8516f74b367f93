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

#include "fairdiv/matroid_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

Bundle with_element(const Bundle& set, int element) {
  Bundle grown = set;
  bundle_insert(grown, element);
  return grown;
}

Bundle swapped(const Bundle& set, int out, int in) {
  Bundle next = set;
  bundle_erase(next, out);
  bundle_insert(next, in);
  return next;
}

void validate_independent_set(const MatroidOracle& oracle, const Bundle& set,
                              const char* label) {
  if (!is_sorted_unique(set)) {
    throw InputError(std::string(label) + " must be strictly increasing");
  }
  for (int e : set) {
    if (e < 0 || e >= oracle.ground_size()) {
      throw InputError(std::string(label) + " element out of the ground set");
    }
  }
  if (!oracle.is_independent(set)) {
    throw InputError(std::string(label) + " is not independent");
  }
}

// Augmenting search over the swap-validity graph. `match_of_i` maps elements
// of I to their matched J partner (-1 when free). Free targets are taken in
// id order before anyone gets displaced, so unforced choices stay small.
bool augment(int j, const std::vector<Bundle>& valid_targets,
             const Bundle& smaller, std::map<int, int>& match_of_i,
             std::vector<bool>& visited) {
  const size_t j_pos = static_cast<size_t>(
      std::lower_bound(smaller.begin(), smaller.end(), j) - smaller.begin());
  for (int i : valid_targets[j_pos]) {
    const auto it = match_of_i.find(i);
    if (it->second == -1) {
      it->second = j;
      return true;
    }
  }
  for (int i : valid_targets[j_pos]) {
    const auto it = match_of_i.find(i);
    const int holder = it->second;
    const size_t holder_pos = static_cast<size_t>(
        std::lower_bound(smaller.begin(), smaller.end(), holder) -
        smaller.begin());
    if (visited[holder_pos]) continue;
    visited[holder_pos] = true;
    if (augment(holder, valid_targets, smaller, match_of_i, visited)) {
      it->second = j;
      return true;
    }
  }
  return false;
}

}  // namespace

MatroidPartitionResult matroid_partition(const MatroidOracle& oracle,
                                         int n_bundles) {
  if (n_bundles <= 0) throw InputError("bundle count must be positive");
  const int m = oracle.ground_size();
  std::vector<Bundle> bundles(static_cast<size_t>(n_bundles));
  std::vector<int> owner(static_cast<size_t>(m), -1);

  for (int x = 0; x < m; ++x) {
    // Direct placement into the first bundle that takes the element.
    int placed_at = -1;
    for (int b = 0; b < n_bundles && placed_at == -1; ++b) {
      if (oracle.is_independent(with_element(bundles[static_cast<size_t>(b)], x))) {
        placed_at = b;
      }
    }
    if (placed_at != -1) {
      bundle_insert(bundles[static_cast<size_t>(placed_at)], x);
      owner[static_cast<size_t>(x)] = placed_at;
      continue;
    }

    // Breadth-first search for a shortest exchange chain
    //   x -> v1 -> ... -> vk -> (bundle with room for vk),
    // where u -> v means v's bundle stays independent after swapping v for
    // u. Applied back to front, every set stays independent; the oracle
    // re-verifies each touched bundle afterwards.
    std::vector<int> parent(static_cast<size_t>(m), -1);
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::deque<int> queue;
    for (int v = 0; v < x; ++v) {
      if (oracle.is_independent(swapped(
              bundles[static_cast<size_t>(owner[static_cast<size_t>(v)])], v,
              x))) {
        parent[static_cast<size_t>(v)] = x;
        seen[static_cast<size_t>(v)] = true;
        queue.push_back(v);
      }
    }

    int chain_end = -1;
    int exit_bundle = -1;
    while (!queue.empty() && chain_end == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int b = 0; b < n_bundles; ++b) {
        if (b == owner[static_cast<size_t>(u)]) continue;
        if (oracle.is_independent(with_element(bundles[static_cast<size_t>(b)], u))) {
          chain_end = u;
          exit_bundle = b;
          break;
        }
      }
      if (chain_end != -1) break;
      for (int v = 0; v < x; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        // u relocates into a different bundle; inside its own bundle the
        // swap test is vacuous (u is already a member) and proves nothing.
        if (owner[static_cast<size_t>(v)] == owner[static_cast<size_t>(u)]) {
          continue;
        }
        if (oracle.is_independent(swapped(
                bundles[static_cast<size_t>(owner[static_cast<size_t>(v)])], v,
                u))) {
          parent[static_cast<size_t>(v)] = u;
          seen[static_cast<size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }

    if (chain_end == -1) {
      return MatroidPartitionResult{false, std::move(bundles), x};
    }

    Bundle touched{exit_bundle};
    int mover = chain_end;
    int destination = exit_bundle;
    while (mover != x) {
      const int source = owner[static_cast<size_t>(mover)];
      bundle_erase(bundles[static_cast<size_t>(source)], mover);
      bundle_insert(bundles[static_cast<size_t>(destination)], mover);
      owner[static_cast<size_t>(mover)] = destination;
      bundle_insert(touched, source);
      destination = source;
      mover = parent[static_cast<size_t>(mover)];
    }
    bundle_insert(bundles[static_cast<size_t>(destination)], x);
    owner[static_cast<size_t>(x)] = destination;

    for (int b : touched) {
      if (!oracle.is_independent(bundles[static_cast<size_t>(b)])) {
        throw InternalError(
            "exchange chain broke a bundle: the oracle is not a matroid");
      }
    }
  }
  return MatroidPartitionResult{true, std::move(bundles), -1};
}

int strong_basis_exchange(const MatroidOracle& oracle, const Bundle& b1_set,
                          const Bundle& b2_set, int b1) {
  validate_independent_set(oracle, b1_set, "first basis");
  validate_independent_set(oracle, b2_set, "second basis");
  if (b1_set.size() != b2_set.size()) {
    throw InputError("bases must have equal size");
  }
  if (!bundle_contains(b1_set, b1)) {
    throw InputError("pivot element is not in the first basis");
  }
  if (bundle_contains(b2_set, b1)) {
    throw InputError("pivot element must not be in the second basis");
  }

  for (int b2 : bundle_minus(b2_set, b1_set)) {
    if (oracle.is_independent(swapped(b1_set, b1, b2)) &&
        oracle.is_independent(swapped(b2_set, b2, b1))) {
      return b2;
    }
  }
  throw InternalError(
      "no symmetric exchange partner: the oracle is not a matroid");
}

std::map<int, int> exchange_bijection(const MatroidOracle& oracle,
                                      const Bundle& larger,
                                      const Bundle& smaller) {
  validate_independent_set(oracle, larger, "larger set");
  validate_independent_set(oracle, smaller, "smaller set");
  if (larger.size() < smaller.size()) {
    throw InputError("first set must be at least as large");
  }
  if (!bundle_intersect(larger, smaller).empty()) {
    throw InputError("sets must be disjoint");
  }

  // Pair validity, precomputed once: (j, i) qualifies when both one-element
  // swaps keep their sets independent.
  std::vector<Bundle> valid_targets(smaller.size());
  for (size_t jp = 0; jp < smaller.size(); ++jp) {
    for (int i : larger) {
      if (oracle.is_independent(swapped(smaller, smaller[jp], i)) &&
          oracle.is_independent(swapped(larger, i, smaller[jp]))) {
        valid_targets[jp].push_back(i);
      }
    }
  }

  std::map<int, int> match_of_i;
  for (int i : larger) match_of_i[i] = -1;
  for (int j : smaller) {
    std::vector<bool> visited(smaller.size(), false);
    if (!augment(j, valid_targets, smaller, match_of_i, visited)) {
      throw InternalError(
          "incomplete exchange matching: the oracle is not a matroid");
    }
  }

  std::map<int, int> mu;
  for (const auto& [i, j] : match_of_i) {
    if (j == -1) continue;
    // Re-validate straight through the oracle before handing the map out.
    if (!oracle.is_independent(swapped(smaller, j, i)) ||
        !oracle.is_independent(swapped(larger, i, j))) {
      throw InternalError("exchange matching failed re-validation");
    }
    mu[j] = i;
  }
  return mu;
}

Allocation swap_ef1_identical(const Instance& instance,
                              const MatroidOracle& oracle,
                              const SwapObserver& observer) {
  if (oracle.ground_size() != instance.good_count()) {
    throw InputError("oracle sized for a different good set");
  }
  if (!instance.identical_valuations()) {
    throw InputError("swap solver needs one shared valuation");
  }
  const int n = instance.agent_count();
  const int m = instance.good_count();

  MatroidPartitionResult start = matroid_partition(oracle, n);
  if (!start.feasible) {
    throw InfeasibleError(
        "ground set cannot be covered by " + std::to_string(n) +
        " independent bundles (stuck at element " +
        std::to_string(start.stuck_element) + ")");
  }
  Allocation alloc{std::move(start.bundles)};

  const auto bundle_values = [&]() {
    std::vector<Rational> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      values[static_cast<size_t>(i)] =
          instance.bundle_value(0, alloc.bundles[static_cast<size_t>(i)]);
    }
    return values;
  };
  // Bundle i fails EF1 against the least bundle exactly when dropping even
  // its best good leaves it ahead.
  const auto violator_set = [&](const std::vector<Rational>& values,
                                const Rational& least_value) {
    std::vector<int> violators;
    for (int i = 0; i < n; ++i) {
      const Bundle& bundle = alloc.bundles[static_cast<size_t>(i)];
      if (bundle.empty()) continue;
      Rational best = instance.value(0, bundle.front());
      for (int g : bundle) best = std::max(best, instance.value(0, g));
      if (values[static_cast<size_t>(i)] - best > least_value) {
        violators.push_back(i);
      }
    }
    return violators;
  };

  // Each iteration either shrinks the violator's bundle or cuts its value by
  // a (1 - 1/m^2) factor, so the bit length of the largest value bounds the
  // swap count; the tripwire only fires when that progress stalls.
  long long bound = static_cast<long long>(m) * m * m;
  {
    namespace mp = boost::multiprecision;
    const mp::cpp_int scale =
        mp::numerator(instance.max_value()) * m /
            mp::denominator(instance.max_value()) +
        1;
    bound *= static_cast<long long>(mp::msb(scale) + 1);
    bound += static_cast<long long>(m) * n + 8;
  }

  for (long long iteration = 0; iteration <= bound; ++iteration) {
    const std::vector<Rational> values = bundle_values();
    int least = 0;
    for (int i = 1; i < n; ++i) {
      if (values[static_cast<size_t>(i)] < values[static_cast<size_t>(least)]) {
        least = i;
      }
    }
    const std::vector<int> violators =
        violator_set(values, values[static_cast<size_t>(least)]);
    if (violators.empty()) return alloc;

    int h = violators.front();
    for (int i : violators) {
      if (values[static_cast<size_t>(i)] > values[static_cast<size_t>(h)]) h = i;
    }

    const Allocation before = alloc;
    Bundle& least_bundle = alloc.bundles[static_cast<size_t>(least)];
    Bundle& high_bundle = alloc.bundles[static_cast<size_t>(h)];
    bool transferred;
    int good_moved;
    int good_returned;

    if (least_bundle.size() < high_bundle.size()) {
      // Hand over the most valuable good the least bundle can absorb; the
      // exchange axiom guarantees one exists.
      Bundle by_value = high_bundle;
      std::stable_sort(by_value.begin(), by_value.end(), [&](int a, int b) {
        return instance.value(0, a) > instance.value(0, b);
      });
      int chosen = -1;
      for (int g : by_value) {
        if (oracle.is_independent(with_element(least_bundle, g))) {
          chosen = g;
          break;
        }
      }
      if (chosen == -1) {
        throw InternalError(
            "no transferable good: the oracle is not a matroid");
      }
      bundle_erase(high_bundle, chosen);
      bundle_insert(least_bundle, chosen);
      transferred = true;
      good_moved = chosen;
      good_returned = -1;
    } else {
      const std::map<int, int> mu =
          exchange_bijection(oracle, least_bundle, high_bundle);
      int chosen = -1;
      Rational best_gap;
      for (int g : high_bundle) {
        const Rational gap =
            instance.value(0, g) - instance.value(0, mu.at(g));
        if (chosen == -1 || gap > best_gap) {
          chosen = g;
          best_gap = gap;
        }
      }
      const int returned = mu.at(chosen);
      bundle_erase(high_bundle, chosen);
      bundle_insert(high_bundle, returned);
      bundle_erase(least_bundle, returned);
      bundle_insert(least_bundle, chosen);
      transferred = false;
      good_moved = chosen;
      good_returned = returned;
    }

    if (observer) {
      const std::vector<Rational> after_values = bundle_values();
      int new_least = 0;
      for (int i = 1; i < n; ++i) {
        if (after_values[static_cast<size_t>(i)] <
            after_values[static_cast<size_t>(new_least)]) {
          new_least = i;
        }
      }
      observer(SwapIteration{
          before, alloc, least, h, transferred, good_moved, good_returned,
          violators,
          violator_set(after_values,
                       after_values[static_cast<size_t>(new_least)])});
    }
  }
  throw InternalError("swap solver exceeded its iteration bound");
}

}  // namespace fairdiv
