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

#ifndef FAIRDIV_MATROID_ALGORITHMS_HPP_
#define FAIRDIV_MATROID_ALGORITHMS_HPP_

#include <functional>
#include <map>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/matroid.hpp"

namespace fairdiv {

// Result of splitting the ground set into n independent bundles. When
// `feasible` is false, `stuck_element` is the first element (in insertion
// order) that no augmenting exchange chain could place; `bundles` then holds
// the partial split of the earlier elements.
struct MatroidPartitionResult {
  bool feasible;
  std::vector<Bundle> bundles;
  int stuck_element;  // -1 when feasible
};

// Partitions the ground set into n independent sets via augmenting-path
// search in the exchange graph (element x reaches y when y's bundle can
// swap y out for x; x exits at any bundle that accepts it directly).
// Shortest augmenting chains are applied back to front; every affected
// bundle is re-verified through the oracle afterwards, so a non-matroid
// "oracle" surfaces as InternalError rather than a wrong partition.
MatroidPartitionResult matroid_partition(const MatroidOracle& oracle, int n_bundles);

// For bases B1, B2 (equal-size independent sets) and b1 in B1 \ B2, returns
// the smallest-id b2 in B2 \ B1 with both B1 - b1 + b2 and B2 - b2 + b1
// independent. Such an element always exists for a true matroid; if the
// scan finds none, InternalError.
int strong_basis_exchange(const MatroidOracle& oracle, const Bundle& b1_set,
                          const Bundle& b2_set, int b1);

// Injective map mu from `smaller` (J) into `larger` (I), both independent
// and disjoint with |I| >= |J|, such that for every j:
//     J - j + mu(j)   and   I - mu(j) + j   are independent.
// Built as a matching over the bipartite swap-validity graph (deterministic
// augmenting search, smaller ids first). The matching is guaranteed to
// exist; failure to complete it means the oracle is not a matroid and
// raises InternalError. Every returned map is re-validated.
std::map<int, int> exchange_bijection(const MatroidOracle& oracle,
                                      const Bundle& larger, const Bundle& smaller);

// Snapshot of one swap-solver iteration, handed to the observer.
struct SwapIteration {
  Allocation before;
  Allocation after;
  int least;                    // argmin own-bundle value (min-id ties)
  int violator;                 // chosen max-value violator (min-id ties)
  bool transferred;             // true: single transfer; false: pair swap
  int good_moved;               // good entering the least bundle
  int good_returned;            // good leaving it on a pair swap, else -1
  std::vector<int> violators_before;
  std::vector<int> violators_after;
};
using SwapObserver = std::function<void(const SwapIteration&)>;

// EF1 under a general matroid constraint for agents with one shared
// valuation. Starts from matroid_partition (InfeasibleError when the ground
// set cannot be covered by n independent bundles), then repeatedly takes
// the least-valued bundle L and the most valuable EF1-violating bundle H:
// either H hands its best L-compatible good over (when |L| < |H|), or the
// pair (g, mu(g)) of largest value gap is swapped through the exchange
// bijection. Each step keeps every bundle independent and either shrinks
// |H| or cuts v(H) by a factor of at least 1/m^2, where m is the ground
// size; an iteration tripwire raises InternalError if progress ever stalls.
Allocation swap_ef1_identical(const Instance& instance, const MatroidOracle& oracle,
                              const SwapObserver& observer = nullptr);

}  // namespace fairdiv

#endif  // FAIRDIV_MATROID_ALGORITHMS_HPP_
