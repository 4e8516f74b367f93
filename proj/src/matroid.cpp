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

#include <numeric>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

void validate_set(const Bundle& set, int ground_size) {
  if (!is_sorted_unique(set)) {
    throw InputError("element set must be strictly increasing");
  }
  for (int e : set) {
    if (e < 0 || e >= ground_size) {
      throw InputError("element out of the ground set");
    }
  }
}

// Minimal union-find for forest checks; path halving, no ranks needed at
// these sizes.
struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  // False when x and y were already connected.
  bool unite(int x, int y) {
    const int rx = find(x);
    const int ry = find(y);
    if (rx == ry) return false;
    parent[static_cast<size_t>(rx)] = ry;
    return true;
  }
};

}  // namespace

UniformMatroid::UniformMatroid(int ground_size, int rank)
    : ground_size_(ground_size), rank_(rank) {
  if (ground_size < 0) throw InputError("negative ground size");
  if (rank < 0) throw InputError("negative rank");
}

bool UniformMatroid::is_independent(const Bundle& set) const {
  validate_set(set, ground_size_);
  return static_cast<int>(set.size()) <= rank_;
}

PartitionMatroid::PartitionMatroid(int ground_size,
                                   std::vector<int> block_of_element,
                                   std::vector<int> caps)
    : ground_size_(ground_size),
      block_of_(std::move(block_of_element)),
      caps_(std::move(caps)) {
  if (ground_size < 0) throw InputError("negative ground size");
  if (block_of_.size() != static_cast<size_t>(ground_size)) {
    throw InputError("one block id per element required");
  }
  for (int b : block_of_) {
    if (b < 0 || b >= static_cast<int>(caps_.size())) {
      throw InputError("block id out of range");
    }
  }
  for (int cap : caps_) {
    // Zero is legal: it turns the block's elements into loops.
    if (cap < 0) throw InputError("negative block cap");
  }
}

PartitionMatroid PartitionMatroid::from_categories(
    const CategoryStructure& constraints) {
  std::vector<int> block_of(static_cast<size_t>(constraints.good_count()));
  for (int g = 0; g < constraints.good_count(); ++g) {
    block_of[static_cast<size_t>(g)] = constraints.category_of(g);
  }
  std::vector<int> caps(static_cast<size_t>(constraints.category_count()));
  for (int h = 0; h < constraints.category_count(); ++h) {
    caps[static_cast<size_t>(h)] = constraints.cap(h);
  }
  return PartitionMatroid(constraints.good_count(), std::move(block_of),
                          std::move(caps));
}

bool PartitionMatroid::is_independent(const Bundle& set) const {
  validate_set(set, ground_size_);
  std::vector<int> count(caps_.size(), 0);
  for (int e : set) {
    const int b = block_of_[static_cast<size_t>(e)];
    if (++count[static_cast<size_t>(b)] > caps_[static_cast<size_t>(b)]) {
      return false;
    }
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw InputError("edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::is_independent(const Bundle& set) const {
  validate_set(set, ground_size());
  DisjointSets components(vertex_count_);
  for (int e : set) {
    const auto& [u, v] = edges_[static_cast<size_t>(e)];
    if (u == v) return false;  // self-loop
    if (!components.unite(u, v)) return false;  // closes a cycle
  }
  return true;
}

}  // namespace fairdiv
