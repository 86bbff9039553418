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

#include "iafb/feasibility.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace iafb {

namespace {

std::string ms_label(int j, int k) {
  return "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

std::string subset_label(std::uint64_t r_mask, std::uint64_t t_mask, const NetworkConfig& cfg, int g) {
  std::ostringstream out;
  out << "J^r = {";
  bool first = true;
  for (int q = 0; q < cfg.num_ms(); ++q) {
    if ((r_mask >> q) & 1U) {
      out << (first ? "" : ",") << ms_label(q / cfg.K, q % cfg.K);
      first = false;
    }
  }
  out << "}, J^t = {";
  first = true;
  for (int i = 0; i < g; ++i) {
    if ((t_mask >> i) & 1U) {
      out << (first ? "" : ",") << (i + 1);
      first = false;
    }
  }
  out << "}";
  return out.str();
}

FeasibilityVerdict infeasible(std::string why) {
  FeasibilityVerdict v;
  v.violated_condition = std::move(why);
  return v;
}

}  // namespace

int receive_slack(const FeedbackProfile& profile, const NetworkConfig& cfg, int j, int k) {
  return a_dim(profile, cfg, j, k) - cfg.d;
}

int transmit_slack(const FeedbackProfile& profile, const NetworkConfig& cfg, int i) {
  return cfg.K * (profile.n[i] - cfg.K * cfg.d);
}

std::optional<std::string> basic_violation(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  validate_profile(profile, cfg);
  const int kd = cfg.K * cfg.d;
  if (cfg.N < kd) {
    return "condition 2 violated: N = " + std::to_string(cfg.N) + " < Kd = " + std::to_string(kd);
  }
  for (int i = 0; i < profile.g; ++i) {
    if (profile.n[i] < kd) {
      return "condition 2 violated: n_" + std::to_string(i + 1) + " = " + std::to_string(profile.n[i]) +
             " < Kd = " + std::to_string(kd);
    }
  }
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int slack = receive_slack(profile, cfg, j, k);
      if (slack < 0) {
        return "condition 1 violated at MS " + ms_label(j, k) + ": m - |B^II\\{j}|Kd - d = " +
               std::to_string(slack) + " < 0";
      }
    }
  }
  return std::nullopt;
}

ProfileFlowNetwork build_flow_network(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  if (auto why = basic_violation(profile, cfg)) {
    throw std::invalid_argument("build_flow_network: " + *why);
  }
  ProfileFlowNetwork net;
  FlowGraph& g = net.graph;
  net.source = g.add_node();
  net.sink = g.add_node();
  std::vector<int> u_node;
  std::vector<int> v_node;
  for (int q = 0; q < cfg.num_ms(); ++q) {
    u_node.push_back(g.add_node());
  }
  for (int i = 0; i < profile.g; ++i) {
    v_node.push_back(g.add_node());
  }
  for (int q = 0; q < cfg.num_ms(); ++q) {
    net.supply_u.push_back(g.add_edge(net.source, u_node[q], receive_slack(profile, cfg, q / cfg.K, q % cfg.K)));
  }
  for (int i = 0; i < profile.g; ++i) {
    net.supply_v.push_back(g.add_edge(net.source, v_node[i], transmit_slack(profile, cfg, i)));
  }
  const int kd = cfg.K * cfg.d;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      for (int i = 0; i < profile.g; ++i) {
        if (i == j) {
          continue;
        }
        const int c = g.add_node();
        ProfileFlowNetwork::Pair pair{j, k, i, 0, 0, 0};
        pair.from_u = g.add_edge(u_node[q], c, g.capacity(net.supply_u[q]));
        pair.from_v = g.add_edge(v_node[i], c, g.capacity(net.supply_v[i]));
        pair.to_sink = g.add_edge(c, net.sink, kd);
        net.pairs.push_back(pair);
        net.demand += kd;
      }
    }
  }
  return net;
}

FeasibilityVerdict check_necessary_enum(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  if (auto why = basic_violation(profile, cfg)) {
    return infeasible(*why);
  }
  const int n_r = cfg.num_ms();
  const int n_t = profile.g;
  if (n_r + n_t > kMaxEnumerationBits) {
    throw std::domain_error("check_necessary_enum: G*K + g = " + std::to_string(n_r + n_t) +
                            " exceeds the enumeration limit " + std::to_string(kMaxEnumerationBits));
  }
  const std::int64_t kd = cfg.K * cfg.d;
  std::vector<std::int64_t> alpha(static_cast<std::size_t>(n_r));
  for (int q = 0; q < n_r; ++q) {
    alpha[q] = receive_slack(profile, cfg, q / cfg.K, q % cfg.K);
  }
  std::vector<std::int64_t> beta(static_cast<std::size_t>(n_t));
  for (int i = 0; i < n_t; ++i) {
    beta[i] = transmit_slack(profile, cfg, i);
  }

  // Incremental state over Gray-code walks of J^r (outer) and J^t (inner).
  std::uint64_t r_mask = 0;
  std::int64_t r_size = 0;
  std::int64_t supply_r = 0;
  std::vector<std::int64_t> r_in_cell(static_cast<std::size_t>(cfg.G), 0);
  std::uint64_t best_r = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_t = 0;
  std::int64_t best_supply = 0;
  std::int64_t best_demand = 0;

  const std::uint64_t r_count = std::uint64_t{1} << n_r;
  const std::uint64_t t_count = std::uint64_t{1} << n_t;
  for (std::uint64_t s = 0; s < r_count; ++s) {
    if (s > 0) {
      const int q = std::countr_zero(s);
      const std::uint64_t bit = std::uint64_t{1} << q;
      const std::int64_t sign = (r_mask & bit) ? -1 : 1;
      r_mask ^= bit;
      r_size += sign;
      supply_r += sign * alpha[q];
      r_in_cell[q / cfg.K] += sign;
    }
    std::uint64_t t_mask = 0;
    std::int64_t supply = supply_r;
    std::int64_t pairs = 0;
    for (std::uint64_t u = 0; u < t_count; ++u) {
      if (u > 0) {
        const int i = std::countr_zero(u);
        const std::uint64_t bit = std::uint64_t{1} << i;
        const std::int64_t sign = (t_mask & bit) ? -1 : 1;
        t_mask ^= bit;
        supply += sign * beta[i];
        pairs += sign * (r_size - r_in_cell[i]);
      }
      const std::int64_t demand = pairs * kd;
      if (supply < demand && (r_mask < best_r || (r_mask == best_r && t_mask < best_t))) {
        best_r = r_mask;
        best_t = t_mask;
        best_supply = supply;
        best_demand = demand;
      }
    }
  }

  if (best_r != std::numeric_limits<std::uint64_t>::max()) {
    return infeasible("condition 3 violated for " + subset_label(best_r, best_t, cfg, n_t) + ": supply " +
                      std::to_string(best_supply) + " < demand " + std::to_string(best_demand));
  }
  FeasibilityVerdict v;
  v.necessary_ok = true;
  return v;
}

FeasibilityVerdict check_necessary_flow(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  if (auto why = basic_violation(profile, cfg)) {
    return infeasible(*why);
  }
  const ProfileFlowNetwork net = build_flow_network(profile, cfg);
  const MaxFlowResult flow = max_flow(net.graph, net.source, net.sink);
  if (flow.value < net.demand) {
    return infeasible("condition 3 violated: max flow " + std::to_string(flow.value) + " < demand " +
                      std::to_string(net.demand));
  }
  FeasibilityVerdict v;
  v.necessary_ok = true;
  FlowWitness w;
  for (const auto& p : net.pairs) {
    w.push_back({p.j, p.k, p.i, flow.flow[p.from_u], flow.flow[p.from_v]});
  }
  v.witness = std::move(w);
  return v;
}

FeasibilityVerdict check_sufficient(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  FeasibilityVerdict v = check_necessary_flow(profile, cfg);
  if (!v.necessary_ok) {
    return v;
  }
  bool n_divisible = true;
  for (int i = 0; i < profile.g; ++i) {
    n_divisible = n_divisible && profile.n[i] % cfg.d == 0;
  }
  bool m_divisible = true;
  const int kd = cfg.K * cfg.d;
  for (int m : profile.m) {
    m_divisible = m_divisible && (m - cfg.d) % kd == 0;
  }
  v.sufficient_ok = n_divisible || m_divisible;
  if (!v.sufficient_ok) {
    v.violated_condition = "divisibility: neither d | n_i for every type-I BS nor Kd | (m_jk - d) for every MS";
  }
  return v;
}

std::string witness_violation(const FlowWitness& witness, const FeedbackProfile& profile,
                              const NetworkConfig& cfg) {
  const int kd = cfg.K * cfg.d;
  std::vector<std::int64_t> used_r(static_cast<std::size_t>(cfg.num_ms()), 0);
  std::vector<std::int64_t> used_t(static_cast<std::size_t>(profile.g), 0);
  std::vector<int> seen(static_cast<std::size_t>(cfg.num_ms()) * cfg.G, 0);
  for (const auto& e : witness) {
    if (e.j < 0 || e.j >= cfg.G || e.k < 0 || e.k >= cfg.K || e.i < 0 || e.i >= profile.g || e.i == e.j) {
      return "witness entry for an invalid pair";
    }
    if (e.f_r < 0 || e.f_t < 0) {
      return "negative witness flow at MS " + ms_label(e.j, e.k);
    }
    if (e.f_r + e.f_t < kd) {
      return "f_r + f_t < Kd at MS " + ms_label(e.j, e.k) + ", BS " + std::to_string(e.i + 1);
    }
    const int q = cfg.ms(e.j, e.k);
    ++seen[static_cast<std::size_t>(q) * cfg.G + e.i];
    used_r[q] += e.f_r;
    used_t[e.i] += e.f_t;
  }
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      for (int i = 0; i < profile.g; ++i) {
        if (i != j && seen[static_cast<std::size_t>(q) * cfg.G + i] != 1) {
          return "pair MS " + ms_label(j, k) + ", BS " + std::to_string(i + 1) + " not covered exactly once";
        }
      }
      if (used_r[q] > receive_slack(profile, cfg, j, k)) {
        return "receive budget exceeded at MS " + ms_label(j, k);
      }
    }
  }
  for (int i = 0; i < profile.g; ++i) {
    if (used_t[i] > transmit_slack(profile, cfg, i)) {
      return "transmit budget exceeded at BS " + std::to_string(i + 1);
    }
  }
  return {};
}

}  // namespace iafb
