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

#ifndef FAIRDIV_ENVY_GRAPH_HPP_
#define FAIRDIV_ENVY_GRAPH_HPP_

#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Directed graph on agents: edge i -> j when i strictly prefers j's bundle,
// v_i(A_i) < v_i(A_j). Exact comparison, no tolerance.
class EnvyGraph {
 public:
  explicit EnvyGraph(int n_agents) : adjacency_(static_cast<size_t>(n_agents)) {}

  int agent_count() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<int>& out_neighbors(int agent) const {
    return adjacency_.at(static_cast<size_t>(agent));
  }
  bool has_edge(int from, int to) const;
  void add_edge(int from, int to);  // keeps neighbor lists sorted
  int edge_count() const;
  bool is_acyclic() const;

  // Graphviz dump for debugging.
  std::string to_dot() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

EnvyGraph build_envy_graph(const Instance& instance, const Allocation& allocation);

// Repeatedly finds a directed envy cycle (depth-first search from the
// smallest-id node with out-edges, preferring smaller neighbors) and rotates
// bundles along it: each agent on the cycle takes the bundle it envies.
// Every rotation strictly raises each cycle member's own-bundle value, so
// the loop terminates with an acyclic graph. Works on partial allocations.
Allocation eliminate_envy_cycles(const Instance& instance, Allocation allocation);

// Kahn's algorithm with a min-id frontier: for every edge i -> j, agent i
// appears before agent j, and among the valid orders the lexicographically
// smallest is returned. Composed with build_envy_graph this places each
// envier before the agent it envies, which is the pick order the category
// solver needs between rounds. Throws InternalError on cyclic input.
std::vector<int> topological_order(const EnvyGraph& graph);

}  // namespace fairdiv

#endif  // FAIRDIV_ENVY_GRAPH_HPP_
