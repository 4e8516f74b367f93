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

#include "fairdiv/instance.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {

bool bundle_contains(const Bundle& bundle, int good) {
  return std::binary_search(bundle.begin(), bundle.end(), good);
}

void bundle_insert(Bundle& bundle, int good) {
  const auto it = std::lower_bound(bundle.begin(), bundle.end(), good);
  if (it == bundle.end() || *it != good) bundle.insert(it, good);
}

void bundle_erase(Bundle& bundle, int good) {
  const auto it = std::lower_bound(bundle.begin(), bundle.end(), good);
  if (it != bundle.end() && *it == good) bundle.erase(it);
}

Bundle bundle_union(const Bundle& a, const Bundle& b) {
  Bundle out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Bundle bundle_intersect(const Bundle& a, const Bundle& b) {
  Bundle out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Bundle bundle_minus(const Bundle& a, const Bundle& b) {
  Bundle out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool is_sorted_unique(const Bundle& bundle) {
  for (size_t i = 1; i < bundle.size(); ++i) {
    if (bundle[i - 1] >= bundle[i]) return false;
  }
  return true;
}

Instance::Instance(int n_agents, int n_goods,
                   std::vector<std::vector<Rational>> values)
    : n_agents_(n_agents), n_goods_(n_goods), values_(std::move(values)) {
  if (n_agents_ < 1) throw InputError("instance needs at least one agent");
  if (n_goods_ < 0) throw InputError("negative good count");
  if (values_.size() != static_cast<size_t>(n_agents_)) {
    throw InputError("value matrix must have one row per agent");
  }
  for (const auto& row : values_) {
    if (row.size() != static_cast<size_t>(n_goods_)) {
      throw InputError("value row length does not match good count");
    }
    for (const Rational& v : row) {
      if (v < 0) throw InputError("negative value");
      if (v > max_value_) max_value_ = v;
    }
  }
}

const Rational& Instance::value(int agent, int good) const {
  if (agent < 0 || agent >= n_agents_) throw InputError("agent id out of range");
  if (good < 0 || good >= n_goods_) throw InputError("good id out of range");
  return values_[static_cast<size_t>(agent)][static_cast<size_t>(good)];
}

Rational Instance::bundle_value(int agent, const Bundle& bundle) const {
  if (!is_sorted_unique(bundle)) {
    throw InputError("bundle must be strictly increasing");
  }
  Rational sum = 0;
  for (int good : bundle) sum += value(agent, good);
  return sum;
}

bool Instance::identical_valuations() const {
  for (int i = 1; i < n_agents_; ++i) {
    if (values_[static_cast<size_t>(i)] != values_[0]) return false;
  }
  return true;
}

CategoryStructure CategoryStructure::create(int n_goods, int n_agents,
                                            std::vector<Bundle> categories,
                                            std::vector<int> caps) {
  if (n_agents < 1) throw InputError("categories need at least one agent");
  if (n_goods < 0) throw InputError("negative good count");
  if (categories.size() != caps.size()) {
    throw InputError("one cap per category required");
  }

  CategoryStructure out;
  out.n_goods_ = n_goods;
  out.n_agents_ = n_agents;
  out.category_of_.assign(static_cast<size_t>(n_goods), -1);

  for (size_t h = 0; h < categories.size(); ++h) {
    const Bundle& goods = categories[h];
    if (!is_sorted_unique(goods)) {
      throw InputError("category goods must be strictly increasing");
    }
    if (goods.empty()) continue;  // normalized away
    for (int g : goods) {
      if (g < 0 || g >= n_goods) throw InputError("category good out of range");
      if (out.category_of_[static_cast<size_t>(g)] != -1) {
        throw InputError("good assigned to two categories");
      }
      out.category_of_[static_cast<size_t>(g)] =
          static_cast<int>(out.categories_.size());
    }

    const int cap = caps[h];
    if (cap <= 0) throw InputError("category cap must be positive");
    // With caps below ceil(|C_h| / n) the category's goods cannot all be
    // placed, so every complete allocation is infeasible.
    const int floor =
        static_cast<int>((goods.size() + static_cast<size_t>(n_agents) - 1) /
                         static_cast<size_t>(n_agents));
    if (cap < floor) {
      throw InfeasibleError("cap " + std::to_string(cap) + " below floor " +
                            std::to_string(floor) + " for a category of " +
                            std::to_string(goods.size()) + " goods");
    }
    out.categories_.push_back(goods);
    out.caps_.push_back(cap);
  }

  for (int g = 0; g < n_goods; ++g) {
    if (out.category_of_[static_cast<size_t>(g)] == -1) {
      throw InputError("good " + std::to_string(g) + " not in any category");
    }
  }
  return out;
}

CategoryStructure CategoryStructure::unconstrained(int n_goods, int n_agents) {
  std::vector<Bundle> categories;
  std::vector<int> caps;
  if (n_goods > 0) {
    Bundle all(static_cast<size_t>(n_goods));
    for (int g = 0; g < n_goods; ++g) all[static_cast<size_t>(g)] = g;
    categories.push_back(std::move(all));
    caps.push_back(n_goods);
  }
  return create(n_goods, n_agents, std::move(categories), std::move(caps));
}

int CategoryStructure::category_of(int good) const {
  if (good < 0 || good >= n_goods_) throw InputError("good id out of range");
  return category_of_[static_cast<size_t>(good)];
}

int CategoryStructure::size_floor(int h) const {
  const Bundle& goods = categories_.at(static_cast<size_t>(h));
  return static_cast<int>((goods.size() + static_cast<size_t>(n_agents_) - 1) /
                          static_cast<size_t>(n_agents_));
}

int Allocation::assigned_count() const {
  size_t total = 0;
  for (const Bundle& b : bundles) total += b.size();
  return static_cast<int>(total);
}

bool Allocation::is_disjoint() const {
  Bundle seen;
  for (const Bundle& b : bundles) {
    if (!is_sorted_unique(b)) return false;
    const size_t expected = seen.size() + b.size();
    seen = bundle_union(seen, b);
    if (seen.size() != expected) return false;
  }
  return true;
}

bool Allocation::is_complete(int n_goods) const {
  if (!is_disjoint()) return false;
  if (assigned_count() != n_goods) return false;
  for (const Bundle& b : bundles) {
    for (int g : b) {
      if (g < 0 || g >= n_goods) return false;
    }
  }
  return true;
}

std::optional<CapViolation> find_cap_violation(
    const Allocation& allocation, const CategoryStructure& constraints) {
  for (size_t i = 0; i < allocation.bundles.size(); ++i) {
    const Bundle& bundle = allocation.bundles[i];
    if (!is_sorted_unique(bundle)) {
      throw InputError("bundle must be strictly increasing");
    }
    std::vector<int> count(static_cast<size_t>(constraints.category_count()),
                           0);
    for (int g : bundle) {
      ++count[static_cast<size_t>(constraints.category_of(g))];
    }
    for (int h = 0; h < constraints.category_count(); ++h) {
      if (count[static_cast<size_t>(h)] > constraints.cap(h)) {
        return CapViolation{static_cast<int>(i), h};
      }
    }
  }
  return std::nullopt;
}

bool is_feasible(const Allocation& allocation,
                 const CategoryStructure& constraints) {
  if (!allocation.is_disjoint()) {
    throw InputError("allocation bundles overlap");
  }
  return !find_cap_violation(allocation, constraints).has_value();
}

}  // namespace fairdiv
