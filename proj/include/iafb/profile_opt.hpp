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
#include <stdexcept>

#include "iafb/feasibility.hpp"
#include "iafb/feedback.hpp"
#include "iafb/network.hpp"

namespace iafb {

/// Thrown when no number of type-I BSs reaches the target DoF (g0 > G).
class UnachievableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// N1 = min(GKd, N).
int n_one(const NetworkConfig& cfg);
/// N0 = min(GKd, floor(N/d) d).
int n_zero(const NetworkConfig& cfg);

/// g1 = max(0, floor(G((G-1)Kd - M + d) / (N1 - Kd))). Throws if N1 <= Kd.
int g_one(const NetworkConfig& cfg);
/// g0 = max(0, ceil(G((G-1)Kd - M + d) / (N0 - Kd))), not clamped above.
/// Throws if N0 <= Kd.
int g_zero(const NetworkConfig& cfg);

/// KG N1 g1 (M - (G - g1) Kd) - KG^2. May be negative.
std::int64_t d_lower_bound(const NetworkConfig& cfg);

struct GreedyResult {
  FeedbackProfile profile;  // pruned profile L0
  FeedbackProfile initial;  // before antenna reduction
  int g0 = 0;  // Step-1 count; profile.g may exceed it
  int n0 = 0;
  FlowWitness witness;  // flow of the initial graph, valid for both profiles
};

/// Type-II count first, then max-flow antenna reduction. The type-I count
/// starts at g0 and grows until the initial profile (m = M, n = N0) meets
/// the necessary conditions. Throws std::invalid_argument for N0 <= Kd and
/// UnachievableError when g0 > G or no count up to G works.
GreedyResult greedy_profile(const NetworkConfig& cfg);

/// (d - C1)(d - C2)^2 / C1: limit of D(L0) / (G^4 K^3) with N = floor(C1 K G),
/// M = floor(C2 K G). Requires 0 < C1, C2 < d < C1 + C2.
double asymptotic_ratio(double c1, double c2, int d);
/// (d - C1)(d - C2)^2 / (C1^2 C2): limit of D(L0) over the full-CDI dimension.
double full_cdi_ratio(double c1, double c2, int d);

}  // namespace iafb
