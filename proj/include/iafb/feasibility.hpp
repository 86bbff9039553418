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
#include <optional>
#include <string>
#include <vector>

#include "iafb/feedback.hpp"
#include "iafb/flow.hpp"
#include "iafb/network.hpp"

namespace iafb {

/// Per-pair flow split: MS (j,k) resolves f_r of the Kd interference
/// dimensions from type-I BS i at the receiver, BS i resolves f_t.
struct WitnessEntry {
  int j = 0;
  int k = 0;
  int i = 0;
  std::int64_t f_r = 0;
  std::int64_t f_t = 0;
};

using FlowWitness = std::vector<WitnessEntry>;

struct FeasibilityVerdict {
  bool necessary_ok = false;
  bool sufficient_ok = false;
  std::optional<FlowWitness> witness;
  std::optional<std::string> violated_condition;
};

/// Receive-side slack m_jk - |B^II \ {j}| K d - d.
int receive_slack(const FeedbackProfile& profile, const NetworkConfig& cfg, int j, int k);
/// Transmit-side slack K (n_i - Kd) of type-I BS i.
int transmit_slack(const FeedbackProfile& profile, const NetworkConfig& cfg, int i);

/// Demand graph of a profile: source a feeds u_jk (per MS) and v_i (per
/// type-I BS); each pair node c_{jk,i} (i type I, i != j) draws from u_jk and
/// v_i and sends Kd to the sink b.
struct ProfileFlowNetwork {
  FlowGraph graph;
  int source = 0;
  int sink = 0;
  std::vector<int> supply_u;  // edge a -> u_jk, per MS
  std::vector<int> supply_v;  // edge a -> v_i, per type-I BS
  struct Pair {
    int j, k, i;
    int from_u;  // edge u_jk -> c
    int from_v;  // edge v_i -> c
    int to_sink;
  };
  std::vector<Pair> pairs;
  std::int64_t demand = 0;
};

/// Conditions 1 and 2 (N, n_i >= Kd and non-negative receive slack), first
/// failure only; nullopt when both hold.
std::optional<std::string> basic_violation(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Requires basic_violation() == nullopt. Nodes are created as a, b, all u
/// (MS order), all v, then pair nodes; u supplies precede v supplies.
ProfileFlowNetwork build_flow_network(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Largest G*K + g accepted by check_necessary_enum.
inline constexpr int kMaxEnumerationBits = 14;

/// Exhaustive subset test over all (J^r, J^t) pairs. Reports the violation
/// with the smallest (J^r mask, J^t mask) in lexicographic order.
FeasibilityVerdict check_necessary_enum(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Max-flow form of the same conditions, with an integer witness.
FeasibilityVerdict check_necessary_flow(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Necessary conditions plus d | n_i for all type-I i, or Kd | (m_jk - d)
/// for all MSs.
FeasibilityVerdict check_sufficient(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Checks the three witness inequalities exactly. Empty string when valid.
std::string witness_violation(const FlowWitness& witness, const FeedbackProfile& profile,
                              const NetworkConfig& cfg);

}  // namespace iafb
