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

#include "fairdiv/matroid.hpp"

#include "doctest.h"
#include "fairdiv/errors.hpp"
#include "fairdiv/matroid_algorithms.hpp"
#include "test_support.hpp"

namespace fairdiv {
namespace {

TEST_CASE("uniform matroid counts") {
  const UniformMatroid m(4, 2);
  CHECK(m.is_independent({}));
  CHECK(m.is_independent({1, 3}));
  CHECK_FALSE(m.is_independent({0, 1, 2}));
  CHECK(testing::audit_matroid(m).ok());
  CHECK(testing::audit_matroid(UniformMatroid(5, 0)).ok());
  CHECK(testing::audit_matroid(UniformMatroid(3, 3)).ok());
  CHECK_THROWS_AS(UniformMatroid(3, -1), InputError);
  CHECK_THROWS_AS(UniformMatroid(-1, 1), InputError);
  CHECK_THROWS_AS(m.is_independent({0, 0}), InputError);
  CHECK_THROWS_AS(m.is_independent({4}), InputError);
}

TEST_CASE("partition matroid mirrors category caps") {
  const CategoryStructure cs =
      CategoryStructure::create(4, 2, {{0, 1}, {2, 3}}, {1, 2});
  const PartitionMatroid m = PartitionMatroid::from_categories(cs);
  CHECK(m.is_independent({0, 2, 3}));
  CHECK_FALSE(m.is_independent({0, 1}));
  CHECK(testing::audit_matroid(m).ok());

  // Independence coincides with single-bundle cap feasibility.
  std::mt19937 rng(7100);
  for (int round = 0; round < 200; ++round) {
    Bundle set;
    for (int g = 0; g < 4; ++g) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) set.push_back(g);
    }
    Allocation probe = Allocation::empty(2);
    probe.bundles[0] = set;
    CHECK(m.is_independent(set) == is_feasible(probe, cs));
  }

  // Cap zero is a legal matroid (its block elements are loops).
  const PartitionMatroid loops(2, {0, 0}, {0});
  CHECK_FALSE(loops.is_independent({0}));
  CHECK(loops.is_independent({}));

  CHECK_THROWS_AS(PartitionMatroid(2, {0, 1}, {1}), InputError);
  CHECK_THROWS_AS(PartitionMatroid(2, {0}, {1}), InputError);
  CHECK_THROWS_AS(PartitionMatroid(2, {0, 0}, {-1}), InputError);
}

TEST_CASE("graphic matroid accepts exactly the forests") {
  // Triangle on vertices 0, 1, 2.
  const GraphicMatroid triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.is_independent({}));
  CHECK(triangle.is_independent({0, 1}));
  CHECK_FALSE(triangle.is_independent({0, 1, 2}));
  CHECK(testing::audit_matroid(triangle).ok());

  // Parallel edges form a two-edge cycle; self-loops are never independent.
  const GraphicMatroid multi(3, {{0, 1}, {0, 1}, {2, 2}});
  CHECK(multi.is_independent({0}));
  CHECK_FALSE(multi.is_independent({0, 1}));
  CHECK_FALSE(multi.is_independent({2}));
  CHECK(testing::audit_matroid(multi).ok());

  CHECK_THROWS_AS(GraphicMatroid(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(GraphicMatroid(-1, {}), InputError);
}

TEST_CASE("random built-in matroids satisfy the axioms") {
  std::mt19937 rng(7200);
  for (int round = 0; round < 30; ++round) {
    const int m = std::uniform_int_distribution<int>(0, 9)(rng);
    const UniformMatroid uniform(
        m, std::uniform_int_distribution<int>(0, m)(rng));
    CHECK(testing::audit_matroid(uniform).ok());

    if (m > 0) {
      const int blocks = std::uniform_int_distribution<int>(1, m)(rng);
      std::vector<int> block_of(static_cast<size_t>(m));
      for (auto& b : block_of) {
        b = std::uniform_int_distribution<int>(0, blocks - 1)(rng);
      }
      std::vector<int> caps(static_cast<size_t>(blocks));
      for (auto& c : caps) c = std::uniform_int_distribution<int>(0, 3)(rng);
      CHECK(testing::audit_matroid(PartitionMatroid(m, block_of, caps)).ok());
    }

    const int vertices = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<std::pair<int, int>> edges(static_cast<size_t>(m));
    for (auto& e : edges) {
      e.first = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
      e.second = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
    }
    CHECK(testing::audit_matroid(GraphicMatroid(vertices, edges)).ok());
  }
}

TEST_CASE("partitioning splits a uniform ground set greedily") {
  const MatroidPartitionResult result = matroid_partition(UniformMatroid(4, 2), 2);
  REQUIRE(result.feasible);
  CHECK(result.bundles == std::vector<Bundle>{{0, 1}, {2, 3}});
  CHECK(result.stuck_element == -1);
}

TEST_CASE("partitioning respects partition-matroid blocks") {
  const CategoryStructure cs = testing::single_category(3, 2, 2);
  const MatroidPartitionResult result =
      matroid_partition(PartitionMatroid::from_categories(cs), 2);
  REQUIRE(result.feasible);
  CHECK(result.bundles == std::vector<Bundle>{{0, 1}, {2}});
}

TEST_CASE("partitioning reports the stuck element when overloaded") {
  const MatroidPartitionResult result = matroid_partition(UniformMatroid(3, 1), 2);
  CHECK_FALSE(result.feasible);
  CHECK(result.stuck_element == 2);
  CHECK(result.bundles == std::vector<Bundle>{{0}, {1}});
}

TEST_CASE("partitioning augments through an exchange chain") {
  // K4: two edge-disjoint spanning trees exist, but the greedy fill of the
  // first bundle must be unwound by an augmenting chain for the last edge.
  const GraphicMatroid k4(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const MatroidPartitionResult result = matroid_partition(k4, 2);
  REQUIRE(result.feasible);
  for (const Bundle& bundle : result.bundles) {
    CHECK(k4.is_independent(bundle));
    CHECK(bundle.size() == 3);
  }
  CHECK(bundle_union(result.bundles[0], result.bundles[1]) ==
        Bundle{0, 1, 2, 3, 4, 5});
}

TEST_CASE("partition feasibility agrees with brute force both ways") {
  std::mt19937 rng(7300);
  int feasible_seen = 0;
  int infeasible_seen = 0;
  for (int round = 0; round < 80; ++round) {
    const int m = std::uniform_int_distribution<int>(1, 8)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);

    std::unique_ptr<MatroidOracle> oracle;
    switch (round % 3) {
      case 0:
        oracle = std::make_unique<UniformMatroid>(
            m, std::uniform_int_distribution<int>(0, m)(rng));
        break;
      case 1: {
        const int blocks = std::uniform_int_distribution<int>(1, m)(rng);
        std::vector<int> block_of(static_cast<size_t>(m));
        for (auto& b : block_of) {
          b = std::uniform_int_distribution<int>(0, blocks - 1)(rng);
        }
        std::vector<int> caps(static_cast<size_t>(blocks));
        for (auto& c : caps) c = std::uniform_int_distribution<int>(0, 2)(rng);
        oracle = std::make_unique<PartitionMatroid>(m, block_of, caps);
        break;
      }
      default: {
        const int vertices = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<std::pair<int, int>> edges(static_cast<size_t>(m));
        for (auto& e : edges) {
          e.first = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
          e.second = std::uniform_int_distribution<int>(0, vertices - 1)(rng);
        }
        oracle = std::make_unique<GraphicMatroid>(vertices, edges);
        break;
      }
    }

    const bool expected = testing::coverable_by_independent_sets(*oracle, n);
    const MatroidPartitionResult result = matroid_partition(*oracle, n);
    CHECK(result.feasible == expected);
    if (result.feasible) {
      ++feasible_seen;
      CHECK(static_cast<int>(result.bundles.size()) == n);
      Bundle covered;
      for (const Bundle& bundle : result.bundles) {
        CHECK(oracle->is_independent(bundle));
        for (int e : bundle) {
          CHECK_FALSE(bundle_contains(covered, e));
          bundle_insert(covered, e);
        }
      }
      CHECK(static_cast<int>(covered.size()) == m);
    } else {
      ++infeasible_seen;
    }
  }
  CHECK(feasible_seen > 0);
  CHECK(infeasible_seen > 0);
}

TEST_CASE("partitioning rejects nonsense bundle counts") {
  CHECK_THROWS_AS(matroid_partition(UniformMatroid(2, 1), 0), InputError);
}

}  // namespace
}  // namespace fairdiv
