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

#ifndef FAIRDIV_INSTANCE_HPP_
#define FAIRDIV_INSTANCE_HPP_

#include <optional>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// A bundle is a strictly increasing list of good ids. Goods and agents are
// dense zero-based ids everywhere in this library; display names live in a
// side table owned by the IO layer.
using Bundle = std::vector<int>;

bool bundle_contains(const Bundle& bundle, int good);
void bundle_insert(Bundle& bundle, int good);   // no-op if already present
void bundle_erase(Bundle& bundle, int good);    // no-op if absent
Bundle bundle_union(const Bundle& a, const Bundle& b);
Bundle bundle_intersect(const Bundle& a, const Bundle& b);
Bundle bundle_minus(const Bundle& a, const Bundle& b);
bool is_sorted_unique(const Bundle& bundle);

// Additive valuation profile: n_agents rows of n_goods nonnegative exact
// values. Immutable after construction.
class Instance {
 public:
  // Throws InputError unless n_agents >= 1, every row has n_goods entries
  // and every entry is >= 0. n_goods may be zero (degenerate instance).
  Instance(int n_agents, int n_goods, std::vector<std::vector<Rational>> values);

  int agent_count() const { return n_agents_; }
  int good_count() const { return n_goods_; }

  const Rational& value(int agent, int good) const;
  Rational bundle_value(int agent, const Bundle& bundle) const;

  // True when all agents share one value row (required by the swap solver).
  bool identical_valuations() const;

  // Largest single-good value across all agents; zero for zero goods.
  const Rational& max_value() const { return max_value_; }

 private:
  int n_agents_;
  int n_goods_;
  std::vector<std::vector<Rational>> values_;
  Rational max_value_;
};

// Categories partition the good set; each category h carries a cap k_h on
// how many of its goods any single bundle may hold. Construction enforces
// the nonemptiness floor k_h >= ceil(|C_h| / n_agents); below it no complete
// feasible allocation exists and InfeasibleError is thrown. Empty categories
// are dropped during normalization.
class CategoryStructure {
 public:
  static CategoryStructure create(int n_goods, int n_agents,
                                  std::vector<Bundle> categories,
                                  std::vector<int> caps);

  // Single category holding every good with cap n_goods: no constraint.
  static CategoryStructure unconstrained(int n_goods, int n_agents);

  int good_count() const { return n_goods_; }
  int agent_count() const { return n_agents_; }
  int category_count() const { return static_cast<int>(categories_.size()); }
  const Bundle& category(int h) const { return categories_.at(h); }
  int cap(int h) const { return caps_.at(h); }
  int category_of(int good) const;

  // ceil(|C_h| / n_agents): the per-bundle occupancy the floor guarantees.
  int size_floor(int h) const;

 private:
  CategoryStructure() = default;

  int n_goods_ = 0;
  int n_agents_ = 0;
  std::vector<Bundle> categories_;
  std::vector<int> caps_;
  std::vector<int> category_of_;  // good id -> category index
};

// An ordered list of disjoint bundles, one per agent. "Complete" means the
// bundles cover every good of the instance; partial allocations appear as
// intermediate states inside the solvers.
struct Allocation {
  std::vector<Bundle> bundles;

  static Allocation empty(int n_agents) {
    return Allocation{std::vector<Bundle>(static_cast<size_t>(n_agents))};
  }

  int agent_count() const { return static_cast<int>(bundles.size()); }
  int assigned_count() const;
  bool is_disjoint() const;
  bool is_complete(int n_goods) const;

  bool operator==(const Allocation& other) const = default;
};

// First (agent, category) pair, in lexicographic order, whose bundle exceeds
// the category cap; nullopt when the allocation is feasible.
struct CapViolation {
  int agent;
  int category;

  bool operator==(const CapViolation& other) const = default;
};

std::optional<CapViolation> find_cap_violation(const Allocation& allocation,
                                               const CategoryStructure& constraints);

bool is_feasible(const Allocation& allocation, const CategoryStructure& constraints);

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCE_HPP_
