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

#include "iafb/profile_opt.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace iafb {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t type_two_excess(const NetworkConfig& cfg) {
  return static_cast<std::int64_t>(cfg.G) * ((cfg.G - 1) * cfg.K * cfg.d - cfg.M + cfg.d);
}

void check_ratio_args(double c1, double c2, int d) {
  if (!(c1 > 0.0 && c2 > 0.0 && c1 < d && c2 < d && c1 + c2 > d)) {
    throw std::invalid_argument("ratio: need 0 < C1, C2 < d < C1 + C2 (C1 = " + std::to_string(c1) +
                                ", C2 = " + std::to_string(c2) + ", d = " + std::to_string(d) + ")");
  }
}

}  // namespace

int n_one(const NetworkConfig& cfg) { return std::min(cfg.G * cfg.K * cfg.d, cfg.N); }

int n_zero(const NetworkConfig& cfg) { return std::min(cfg.G * cfg.K * cfg.d, (cfg.N / cfg.d) * cfg.d); }

int g_one(const NetworkConfig& cfg) {
  const int kd = cfg.K * cfg.d;
  const int n1 = n_one(cfg);
  if (n1 <= kd) {
    throw std::invalid_argument("g_one: N1 = " + std::to_string(n1) + " <= Kd = " + std::to_string(kd));
  }
  return static_cast<int>(std::max<std::int64_t>(0, floor_div(type_two_excess(cfg), n1 - kd)));
}

int g_zero(const NetworkConfig& cfg) {
  const int kd = cfg.K * cfg.d;
  const int n0 = n_zero(cfg);
  if (n0 <= kd) {
    throw std::invalid_argument("g_zero: N0 = " + std::to_string(n0) + " <= Kd = " + std::to_string(kd));
  }
  return static_cast<int>(std::max<std::int64_t>(0, ceil_div(type_two_excess(cfg), n0 - kd)));
}

std::int64_t d_lower_bound(const NetworkConfig& cfg) {
  const std::int64_t g1 = g_one(cfg);
  const std::int64_t kg = static_cast<std::int64_t>(cfg.K) * cfg.G;
  return kg * n_one(cfg) * g1 * (cfg.M - (cfg.G - g1) * cfg.K * cfg.d) - kg * cfg.G;
}

GreedyResult greedy_profile(const NetworkConfig& cfg) {
  validate_config(cfg);
  GreedyResult out;
  out.n0 = n_zero(cfg);
  out.g0 = g_zero(cfg);
  if (out.g0 > cfg.G) {
    throw UnachievableError("greedy_profile: g0 = " + std::to_string(out.g0) + " > G = " + std::to_string(cfg.G) +
                            "; the target DoF is unachievable with this antenna configuration");
  }
  // The Step-1 count only balances the aggregate demand. Type-I cells may
  // still face too many type-II BSs, so g grows until the profile is usable.
  std::optional<ProfileFlowNetwork> net;
  MaxFlowResult flow;
  for (int g = out.g0; g <= cfg.G && !net; ++g) {
    FeedbackProfile trial = FeedbackProfile::uniform(cfg, cfg.M, g, std::vector<int>(static_cast<std::size_t>(g), out.n0));
    if (basic_violation(trial, cfg)) {
      continue;
    }
    ProfileFlowNetwork candidate = build_flow_network(trial, cfg);
    flow = max_flow(candidate.graph, candidate.source, candidate.sink);
    if (flow.value == candidate.demand) {
      out.initial = std::move(trial);
      net = std::move(candidate);
    }
  }
  if (!net) {
    throw UnachievableError("greedy_profile: no type-I count in " + std::to_string(out.g0) + ".." +
                            std::to_string(cfg.G) + " satisfies the necessary conditions");
  }

  const std::int64_t kd = cfg.K * cfg.d;
  out.profile = out.initial;
  for (int i = 0; i < out.initial.g; ++i) {
    const int e = net->supply_v[i];
    const std::int64_t slack = net->graph.capacity(e) - flow.flow[e];
    out.profile.n[i] = out.n0 - static_cast<int>(slack / kd) * cfg.d;
  }
  for (int q = 0; q < cfg.num_ms(); ++q) {
    const int e = net->supply_u[q];
    out.profile.m[q] = cfg.M - static_cast<int>(net->graph.capacity(e) - flow.flow[e]);
  }
  for (const auto& p : net->pairs) {
    out.witness.push_back({p.j, p.k, p.i, flow.flow[p.from_u], flow.flow[p.from_v]});
  }
  return out;
}

double asymptotic_ratio(double c1, double c2, int d) {
  check_ratio_args(c1, c2, d);
  return (d - c1) * (d - c2) * (d - c2) / c1;
}

double full_cdi_ratio(double c1, double c2, int d) {
  check_ratio_args(c1, c2, d);
  return (d - c1) * (d - c2) * (d - c2) / (c1 * c1 * c2);
}

}  // namespace iafb
