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

#include "fairdiv/envy_graph.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

enum class Color { kWhite, kGray, kBlack };

// Depth-first search preferring small neighbor ids; returns true when a
// cycle was found and leaves it in `cycle` (in rotation order).
bool find_cycle_from(const EnvyGraph& graph, int node, std::vector<Color>& color,
                     std::vector<int>& path, std::vector<int>& cycle) {
  color[static_cast<size_t>(node)] = Color::kGray;
  path.push_back(node);
  for (int next : graph.out_neighbors(node)) {
    if (color[static_cast<size_t>(next)] == Color::kGray) {
      const auto start = std::find(path.begin(), path.end(), next);
      cycle.assign(start, path.end());
      return true;
    }
    if (color[static_cast<size_t>(next)] == Color::kWhite &&
        find_cycle_from(graph, next, color, path, cycle)) {
      return true;
    }
  }
  path.pop_back();
  color[static_cast<size_t>(node)] = Color::kBlack;
  return false;
}

bool find_cycle(const EnvyGraph& graph, std::vector<int>& cycle) {
  std::vector<Color> color(static_cast<size_t>(graph.agent_count()),
                           Color::kWhite);
  std::vector<int> path;
  for (int start = 0; start < graph.agent_count(); ++start) {
    if (color[static_cast<size_t>(start)] == Color::kWhite &&
        find_cycle_from(graph, start, color, path, cycle)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool EnvyGraph::has_edge(int from, int to) const {
  const auto& row = adjacency_.at(static_cast<size_t>(from));
  return std::binary_search(row.begin(), row.end(), to);
}

void EnvyGraph::add_edge(int from, int to) {
  if (from < 0 || from >= agent_count() || to < 0 || to >= agent_count()) {
    throw InputError("envy edge endpoint out of range");
  }
  if (from == to) throw InputError("self-envy edge");
  auto& row = adjacency_[static_cast<size_t>(from)];
  const auto it = std::lower_bound(row.begin(), row.end(), to);
  if (it == row.end() || *it != to) row.insert(it, to);
}

int EnvyGraph::edge_count() const {
  size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return static_cast<int>(total);
}

bool EnvyGraph::is_acyclic() const {
  std::vector<int> cycle;
  return !find_cycle(*this, cycle);
}

std::string EnvyGraph::to_dot() const {
  std::string out = "digraph envy {\n";
  for (int i = 0; i < agent_count(); ++i) {
    out += "  " + std::to_string(i) + ";\n";
  }
  for (int i = 0; i < agent_count(); ++i) {
    for (int j : out_neighbors(i)) {
      out += "  " + std::to_string(i) + " -> " + std::to_string(j) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

EnvyGraph build_envy_graph(const Instance& instance,
                           const Allocation& allocation) {
  if (allocation.agent_count() != instance.agent_count()) {
    throw InputError("allocation has the wrong number of bundles");
  }
  const int n = instance.agent_count();
  std::vector<Rational> own(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    own[static_cast<size_t>(i)] =
        instance.bundle_value(i, allocation.bundles[static_cast<size_t>(i)]);
  }
  EnvyGraph graph(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (own[static_cast<size_t>(i)] <
          instance.bundle_value(i, allocation.bundles[static_cast<size_t>(j)])) {
        graph.add_edge(i, j);
      }
    }
  }
  return graph;
}

Allocation eliminate_envy_cycles(const Instance& instance,
                                 Allocation allocation) {
  // Each rotation strictly raises every cycle member's own value and the sum
  // of own values is bounded, so this terminates; the tripwire only guards
  // against a broken comparison.
  const long long kMaxRounds =
      static_cast<long long>(instance.agent_count()) * instance.agent_count() *
          instance.agent_count() +
      static_cast<long long>(instance.agent_count()) + 8;
  for (long long round = 0; round <= kMaxRounds; ++round) {
    const EnvyGraph graph = build_envy_graph(instance, allocation);
    std::vector<int> cycle;
    if (!find_cycle(graph, cycle)) return allocation;
    // Everyone on the cycle takes the bundle it envies; the last member
    // inherits the first member's old bundle.
    Bundle first = std::move(allocation.bundles[static_cast<size_t>(cycle.front())]);
    for (size_t p = 0; p + 1 < cycle.size(); ++p) {
      allocation.bundles[static_cast<size_t>(cycle[p])] =
          std::move(allocation.bundles[static_cast<size_t>(cycle[p + 1])]);
    }
    allocation.bundles[static_cast<size_t>(cycle.back())] = std::move(first);
  }
  throw InternalError("envy cycle elimination failed to converge");
}

std::vector<int> topological_order(const EnvyGraph& graph) {
  const int n = graph.agent_count();
  std::vector<int> indegree(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v : graph.out_neighbors(u)) ++indegree[static_cast<size_t>(v)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> frontier;
  for (int u = 0; u < n; ++u) {
    if (indegree[static_cast<size_t>(u)] == 0) frontier.push(u);
  }
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  while (!frontier.empty()) {
    const int u = frontier.top();
    frontier.pop();
    order.push_back(u);
    for (int v : graph.out_neighbors(u)) {
      if (--indegree[static_cast<size_t>(v)] == 0) frontier.push(v);
    }
  }
  if (order.size() != static_cast<size_t>(n)) {
    throw InternalError("topological order requested for a cyclic envy graph");
  }
  return order;
}

}  // namespace fairdiv
