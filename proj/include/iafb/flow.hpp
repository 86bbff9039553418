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

#pragma once

#include <cstdint>
#include <vector>

namespace iafb {

/// Directed graph with non-negative integer capacities. Edge ids are
/// assigned in insertion order, and each node's adjacency is scanned in that
/// order, which fixes the flow returned by max_flow.
class FlowGraph {
 public:
  explicit FlowGraph(int nodes = 0) : adj_(static_cast<std::size_t>(nodes)) {}

  int add_node();
  /// Returns the edge id. Throws on a negative capacity or unknown node.
  int add_edge(int from, int to, std::int64_t capacity);

  int num_nodes() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int from(int e) const { return edges_[static_cast<std::size_t>(e)].from; }
  int to(int e) const { return edges_[static_cast<std::size_t>(e)].to; }
  std::int64_t capacity(int e) const { return edges_[static_cast<std::size_t>(e)].cap; }

 private:
  friend struct MaxFlowSolver;
  struct Edge {
    int from;
    int to;
    std::int64_t cap;
  };
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // outgoing edge ids
};

struct MaxFlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> flow;  // per edge id
};

/// Exact maximum flow by Dinic's blocking-flow method (augmentation along
/// shortest residual paths). Throws std::invalid_argument if source == sink
/// or either is out of range.
MaxFlowResult max_flow(const FlowGraph& graph, int source, int sink);

}  // namespace iafb
