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

#ifndef FAIRDIV_MATROID_HPP_
#define FAIRDIV_MATROID_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Independence oracle over the ground set {0, ..., ground_size() - 1}.
// Implementations must describe a matroid: the empty set is independent,
// independence is closed under subsets, and for independent |A| < |B| some
// element of B \ A extends A. is_independent must be pure and reentrant;
// the algorithms in this library call it with sorted unique sets only.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int ground_size() const = 0;
  virtual bool is_independent(const Bundle& set) const = 0;
};

// Independent iff |S| <= rank.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int ground_size, int rank);

  int ground_size() const override { return ground_size_; }
  bool is_independent(const Bundle& set) const override;
  int rank() const { return rank_; }

 private:
  int ground_size_;
  int rank_;
};

// Independent iff every block holds at most its cap. Mirrors a category
// structure over the goods.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(int ground_size, std::vector<int> block_of_element,
                   std::vector<int> caps);
  static PartitionMatroid from_categories(const CategoryStructure& constraints);

  int ground_size() const override { return ground_size_; }
  bool is_independent(const Bundle& set) const override;

 private:
  int ground_size_;
  std::vector<int> block_of_;
  std::vector<int> caps_;
};

// Ground elements are the edges of an undirected multigraph; a set is
// independent iff it is a forest. Self-loops are permanently dependent.
class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  bool is_independent(const Bundle& set) const override;
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_MATROID_HPP_
