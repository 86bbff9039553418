// SPDX-License-Identifier: Apache-2.0
//
// iafb: interference alignment with partial CSI feedback
// Copyright (C) 2026 The iafb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "iafb/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace iafb {

int FlowGraph::add_node() {
  adj_.emplace_back();
  return num_nodes() - 1;
}

int FlowGraph::add_edge(int from, int to, std::int64_t capacity) {
  if (from < 0 || from >= num_nodes() || to < 0 || to >= num_nodes()) {
    throw std::invalid_argument("FlowGraph::add_edge: unknown node");
  }
  if (capacity < 0) {
    throw std::invalid_argument("FlowGraph::add_edge: negative capacity " + std::to_string(capacity));
  }
  edges_.push_back({from, to, capacity});
  const int id = num_edges() - 1;
  adj_[static_cast<std::size_t>(from)].push_back(id);
  return id;
}

// Residual arcs: 2e is edge e forward, 2e+1 its reverse.
struct MaxFlowSolver {
  const FlowGraph& g;
  int source;
  int sink;
  std::vector<std::vector<int>> arcs;
  std::vector<std::int64_t> residual;
  std::vector<int> level;
  std::vector<std::size_t> cursor;

  MaxFlowSolver(const FlowGraph& graph, int s, int t) : g(graph), source(s), sink(t) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    arcs.resize(n);
    residual.resize(2 * g.edges_.size());
    for (std::size_t v = 0; v < n; ++v) {
      for (int e : g.adj_[v]) {
        arcs[v].push_back(2 * e);
      }
    }
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
      residual[2 * e] = g.edges_[e].cap;
      residual[2 * e + 1] = 0;
      arcs[static_cast<std::size_t>(g.edges_[e].to)].push_back(static_cast<int>(2 * e + 1));
    }
  }

  int head(int arc) const {
    const auto& e = g.edges_[static_cast<std::size_t>(arc / 2)];
    return arc % 2 == 0 ? e.to : e.from;
  }

  bool build_levels() {
    level.assign(arcs.size(), -1);
    std::queue<int> frontier;
    level[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int arc : arcs[static_cast<std::size_t>(v)]) {
        const int w = head(arc);
        if (residual[static_cast<std::size_t>(arc)] > 0 && level[static_cast<std::size_t>(w)] < 0) {
          level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(v)] + 1;
          frontier.push(w);
        }
      }
    }
    return level[static_cast<std::size_t>(sink)] >= 0;
  }

  std::int64_t push(int v, std::int64_t limit) {
    if (v == sink) {
      return limit;
    }
    auto& arcs_v = arcs[static_cast<std::size_t>(v)];
    for (auto& i = cursor[static_cast<std::size_t>(v)]; i < arcs_v.size(); ++i) {
      const int arc = arcs_v[i];
      const int w = head(arc);
      auto& cap = residual[static_cast<std::size_t>(arc)];
      if (cap <= 0 || level[static_cast<std::size_t>(w)] != level[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      const std::int64_t pushed = push(w, std::min(limit, cap));
      if (pushed > 0) {
        cap -= pushed;
        residual[static_cast<std::size_t>(arc ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  MaxFlowResult run() {
    MaxFlowResult out;
    while (build_levels()) {
      cursor.assign(arcs.size(), 0);
      while (const std::int64_t pushed = push(source, std::numeric_limits<std::int64_t>::max())) {
        out.value += pushed;
      }
    }
    out.flow.resize(g.edges_.size());
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
      out.flow[e] = residual[2 * e + 1];
    }
    return out;
  }
};

MaxFlowResult max_flow(const FlowGraph& graph, int source, int sink) {
  if (source < 0 || source >= graph.num_nodes() || sink < 0 || sink >= graph.num_nodes()) {
    throw std::invalid_argument("max_flow: source or sink out of range");
  }
  if (source == sink) {
    throw std::invalid_argument("max_flow: source equals sink");
  }
  return MaxFlowSolver(graph, source, sink).run();
}

}  // namespace iafb
