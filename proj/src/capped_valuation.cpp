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

#include "fairdiv/capped_valuation.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Bundle top_goods(const Instance& instance, int agent, const Bundle& from,
                 int k) {
  if (k < 0) throw InputError("negative count");
  if (!is_sorted_unique(from)) {
    throw InputError("good set must be strictly increasing");
  }
  for (int g : from) {
    if (g < 0 || g >= instance.good_count()) {
      throw InputError("good id out of range");
    }
  }
  if (agent < 0 || agent >= instance.agent_count()) {
    throw InputError("agent id out of range");
  }
  if (k >= static_cast<int>(from.size())) return from;

  // Stable sort of ids by descending value keeps equal-value goods in id
  // order, so the prefix is the min-id tie-break.
  Bundle by_value = from;
  std::stable_sort(by_value.begin(), by_value.end(), [&](int a, int b) {
    return instance.value(agent, a) > instance.value(agent, b);
  });
  by_value.resize(static_cast<size_t>(k));
  std::sort(by_value.begin(), by_value.end());
  return by_value;
}

CappedValuation::CappedValuation(const Instance& instance,
                                 const CategoryStructure& constraints,
                                 int agent)
    : instance_(instance), constraints_(constraints), agent_(agent) {
  // Only the good sets must line up: the constraint's agent count sets the
  // caps and may differ from the valuation profile's (one row is enough).
  if (constraints.good_count() != instance.good_count()) {
    throw InputError("constraints sized for a different good set");
  }
  if (agent < 0 || agent >= instance.agent_count()) {
    throw InputError("agent id out of range");
  }
}

namespace {

void validate_bundle(const Instance& instance, const Bundle& bundle) {
  if (!is_sorted_unique(bundle)) {
    throw InputError("bundle must be strictly increasing");
  }
  for (int g : bundle) {
    if (g < 0 || g >= instance.good_count()) {
      throw InputError("good id out of range");
    }
  }
}

}  // namespace

Rational CappedValuation::value(const Bundle& bundle) const {
  validate_bundle(instance_, bundle);
  Rational total = 0;
  for (int h = 0; h < constraints_.category_count(); ++h) {
    total += category_value(h, bundle);
  }
  return total;
}

Rational CappedValuation::category_value(int category,
                                         const Bundle& bundle) const {
  if (category < 0 || category >= constraints_.category_count()) {
    throw InputError("category index out of range");
  }
  validate_bundle(instance_, bundle);
  const Bundle inside =
      bundle_intersect(bundle, constraints_.category(category));
  const Bundle kept =
      top_goods(instance_, agent_, inside, constraints_.cap(category));
  return instance_.bundle_value(agent_, kept);
}

Rational CappedValuation::marginal_gain(const Bundle& bundle, int good) const {
  validate_bundle(instance_, bundle);
  if (good < 0 || good >= instance_.good_count()) {
    throw InputError("good id out of range");
  }
  if (bundle_contains(bundle, good)) {
    throw InputError("good already in the bundle");
  }
  // Only the good's own category can change.
  const int h = constraints_.category_of(good);
  Bundle grown = bundle;
  bundle_insert(grown, good);
  return category_value(h, grown) - category_value(h, bundle);
}

}  // namespace fairdiv
