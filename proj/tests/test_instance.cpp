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

#include "doctest.h"
#include "fairdiv/errors.hpp"
#include "test_support.hpp"

namespace fairdiv {
namespace {

using testing::counterexample_constraints;
using testing::counterexample_instance;
using testing::make_allocation;
using testing::make_instance;
using testing::single_category;

TEST_CASE("bundle helpers keep sets sorted and unique") {
  Bundle b;
  bundle_insert(b, 3);
  bundle_insert(b, 1);
  bundle_insert(b, 2);
  bundle_insert(b, 1);  // duplicate, ignored
  CHECK(b == Bundle{1, 2, 3});
  CHECK(bundle_contains(b, 2));
  CHECK_FALSE(bundle_contains(b, 0));
  bundle_erase(b, 2);
  bundle_erase(b, 9);  // absent, ignored
  CHECK(b == Bundle{1, 3});

  CHECK(bundle_union({0, 2}, {1, 2}) == Bundle{0, 1, 2});
  CHECK(bundle_intersect({0, 1, 2}, {1, 2, 3}) == Bundle{1, 2});
  CHECK(bundle_minus({0, 1, 2}, {1}) == Bundle{0, 2});
  CHECK(is_sorted_unique({0, 4, 9}));
  CHECK(is_sorted_unique({}));
  CHECK_FALSE(is_sorted_unique({1, 1}));
  CHECK_FALSE(is_sorted_unique({2, 1}));
}

TEST_CASE("instance validates its value table") {
  CHECK_THROWS_AS(make_instance({}), InputError);                    // no agents
  CHECK_THROWS_AS(make_instance({{1, 2}, {1}}), InputError);         // ragged
  CHECK_THROWS_AS(make_instance({{1, -2}}), InputError);             // negative
  CHECK_THROWS_AS(Instance(2, 2, {{Rational(1), Rational(2)}}), InputError);

  const Instance degenerate = make_instance({{}});  // one agent, zero goods
  CHECK(degenerate.agent_count() == 1);
  CHECK(degenerate.good_count() == 0);
  CHECK(degenerate.max_value() == 0);

  const Instance inst = make_instance({{10, 7, 5, 3}, {8, 9, 2, 4}});
  CHECK(inst.value(1, 1) == Rational(9));
  CHECK(inst.max_value() == Rational(10));
  CHECK_FALSE(inst.identical_valuations());
  CHECK(counterexample_instance().identical_valuations());
  CHECK_THROWS_AS(inst.value(2, 0), InputError);
  CHECK_THROWS_AS(inst.value(0, 4), InputError);
}

TEST_CASE("bundle_value sums the agent's row") {
  const Instance inst = counterexample_instance();
  CHECK(inst.bundle_value(0, {0, 1}) == Rational(51));
  CHECK(inst.bundle_value(1, {2, 3}) == Rational(2));
  CHECK(inst.bundle_value(0, {}) == Rational(0));
  CHECK_THROWS_AS(inst.bundle_value(0, {7}), InputError);
  CHECK_THROWS_AS(inst.bundle_value(0, {1, 1}), InputError);  // not a set
}

TEST_CASE("category structure enforces the occupancy floor") {
  // Three goods in one category, two agents: a cap of one leaves a good
  // homeless (ceil(3/2) = 2), so construction must refuse.
  CHECK_THROWS_AS(single_category(3, 2, 1), InfeasibleError);
  CHECK_NOTHROW(single_category(3, 2, 2));

  const CategoryStructure cs = CategoryStructure::create(
      4, 2, {{0, 1}, {2, 3}}, {1, 2});
  CHECK(cs.category_count() == 2);
  CHECK(cs.cap(0) == 1);
  CHECK(cs.cap(1) == 2);
  CHECK(cs.category_of(0) == 0);
  CHECK(cs.category_of(3) == 1);
  CHECK(cs.size_floor(0) == 1);

  // Partition defects.
  CHECK_THROWS_AS(CategoryStructure::create(4, 2, {{0, 1}, {2}}, {1, 1}),
                  InputError);  // good 3 uncovered
  CHECK_THROWS_AS(CategoryStructure::create(4, 2, {{0, 1}, {1, 2, 3}}, {1, 2}),
                  InputError);  // good 1 twice
  CHECK_THROWS_AS(CategoryStructure::create(4, 2, {{0, 1, 2, 3}}, {0}),
                  InputError);  // nonpositive cap
  CHECK_THROWS_AS(CategoryStructure::create(4, 2, {{0, 1, 2, 4}}, {4}),
                  InputError);  // unknown good id
  CHECK_THROWS_AS(CategoryStructure::create(4, 0, {{0, 1, 2, 3}}, {4}),
                  InputError);  // no agents

  // Empty categories are normalized away.
  const CategoryStructure dropped = CategoryStructure::create(
      2, 2, {{}, {0, 1}, {}}, {1, 1, 3});
  CHECK(dropped.category_count() == 1);
  CHECK(dropped.cap(0) == 1);

  // Zero goods: a legal degenerate structure with no categories.
  const CategoryStructure none = CategoryStructure::create(0, 3, {}, {});
  CHECK(none.category_count() == 0);

  const CategoryStructure open = CategoryStructure::unconstrained(5, 2);
  CHECK(open.category_count() == 1);
  CHECK(open.cap(0) == 5);
}

TEST_CASE("allocation shape checks") {
  Allocation a = Allocation::empty(2);
  CHECK(a.agent_count() == 2);
  CHECK(a.assigned_count() == 0);
  CHECK(a.is_disjoint());
  CHECK(a.is_complete(0));
  CHECK_FALSE(a.is_complete(1));

  a = make_allocation({{0, 1}, {2, 3}});
  CHECK(a.assigned_count() == 4);
  CHECK(a.is_disjoint());
  CHECK(a.is_complete(4));
  CHECK_FALSE(a.is_complete(5));
  CHECK_FALSE(make_allocation({{0, 1}, {1, 2}}).is_disjoint());
}

TEST_CASE("feasibility reports the first violating pair") {
  const CategoryStructure cs = counterexample_constraints();

  CHECK(is_feasible(make_allocation({{0, 1}, {2, 3}}), cs));
  CHECK_FALSE(find_cap_violation(make_allocation({{0, 1}, {2, 3}}), cs).has_value());

  const auto violation = find_cap_violation(make_allocation({{0, 1, 2}, {3}}), cs);
  REQUIRE(violation.has_value());
  CHECK(violation->agent == 0);
  CHECK(violation->category == 0);
  CHECK_FALSE(is_feasible(make_allocation({{0, 1, 2}, {3}}), cs));

  // Lexicographically first violation: agent 0 before agent 1, and within
  // an agent the smallest category index.
  const CategoryStructure two = CategoryStructure::create(
      4, 2, {{0, 1}, {2, 3}}, {1, 1});
  const auto first = find_cap_violation(make_allocation({{2, 3}, {0, 1}}), two);
  REQUIRE(first.has_value());
  CHECK(first->agent == 0);
  CHECK(first->category == 1);

  // Partial allocations are fine as long as counts stay capped.
  CHECK(is_feasible(make_allocation({{0}, {}}), cs));
  CHECK_THROWS_AS(is_feasible(make_allocation({{0}, {0}}), cs), InputError);
  CHECK_THROWS_AS(is_feasible(make_allocation({{9}, {}}), cs), InputError);
}

}  // namespace
}  // namespace fairdiv
