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

#include "doctest.h"
#include "fairdiv/errors.hpp"
#include "test_support.hpp"

namespace fairdiv {
namespace {

using testing::counterexample_constraints;
using testing::counterexample_instance;
using testing::make_instance;
using testing::single_category;

std::vector<Allocation> collect(const Instance& inst, const CategoryStructure& cs,
                                std::uint64_t limit = kDefaultEnumerationBudget) {
  std::vector<Allocation> out;
  enumerate_feasible(inst, cs, limit, [&](const Allocation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

TEST_CASE("four goods, pair caps: exactly the six ordered pair splits") {
  const Instance inst = counterexample_instance();
  const CategoryStructure cs = counterexample_constraints();

  const auto all = collect(inst, cs);
  REQUIRE(all.size() == 6);
  for (const Allocation& a : all) {
    CHECK(a.is_complete(4));
    CHECK(is_feasible(a, cs));
    CHECK(a.bundles[0].size() == 2);  // cap 2 over 4 goods forces 2 + 2
  }
  // Lexicographic in the good -> agent assignment vector.
  CHECK(all.front().bundles == std::vector<Bundle>{{0, 1}, {2, 3}});
  CHECK(all[1].bundles == std::vector<Bundle>{{0, 2}, {1, 3}});
  CHECK(all.back().bundles == std::vector<Bundle>{{2, 3}, {0, 1}});
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }
}

TEST_CASE("two goods, unit caps: the two exchanges") {
  const Instance inst = make_instance({{1, 2}, {3, 4}});
  const auto all = collect(inst, single_category(2, 2, 1));
  REQUIRE(all.size() == 2);
  CHECK(all[0].bundles == std::vector<Bundle>{{0}, {1}});
  CHECK(all[1].bundles == std::vector<Bundle>{{1}, {0}});
}

TEST_CASE("zero goods yield the single empty allocation") {
  const Instance inst = make_instance({{}, {}});
  const auto all = collect(inst, CategoryStructure::create(0, 2, {}, {}));
  REQUIRE(all.size() == 1);
  CHECK(all[0] == Allocation::empty(2));
}

TEST_CASE("budget exhaustion is an error, early stop is not") {
  const Instance inst = counterexample_instance();
  const CategoryStructure cs = counterexample_constraints();

  CHECK_THROWS_AS(collect(inst, cs, 5), BudgetError);
  CHECK_NOTHROW(collect(inst, cs, 6));

  // A visitor that stops consumes no further budget.
  int seen = 0;
  const bool exhausted = enumerate_feasible(inst, cs, 1, [&](const Allocation&) {
    ++seen;
    return false;
  });
  CHECK_FALSE(exhausted);
  CHECK(seen == 1);
  CHECK(enumerate_feasible(inst, cs, 6, [](const Allocation&) { return true; }));
}

TEST_CASE("counts match the convolution oracle") {
  std::mt19937 rng(20260814);
  for (int round = 0; round < 40; ++round) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const int m = std::uniform_int_distribution<int>(0, 7)(rng);
    const Instance inst = testing::random_instance(rng, n, m, 9, false);
    const CategoryStructure cs = testing::random_categories(rng, m, n, 3);

    std::uint64_t expected = 1;
    for (int h = 0; h < cs.category_count(); ++h) {
      expected *= testing::assignment_count_oracle(
          n, static_cast<int>(cs.category(h).size()), cs.cap(h));
    }

    std::uint64_t count = 0;
    enumerate_feasible(inst, cs, kDefaultEnumerationBudget,
                       [&](const Allocation& a) {
                         CHECK(a.is_complete(m));
                         CHECK(is_feasible(a, cs));
                         ++count;
                         return true;
                       });
    CHECK(count == expected);
  }
}

TEST_CASE("enumeration order is reproducible") {
  const Instance inst = counterexample_instance();
  const CategoryStructure cs = counterexample_constraints();
  CHECK(collect(inst, cs) == collect(inst, cs));
}

}  // namespace
}  // namespace fairdiv
