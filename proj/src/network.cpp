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

#include "iafb/network.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iafb/rng.hpp"

namespace iafb {

std::vector<std::string> config_violations(const NetworkConfig& cfg) {
  std::vector<std::string> out;
  auto fail = [&out](const std::string& msg) { out.push_back(msg); };
  if (cfg.G < 1) fail("G >= 1 (G = " + std::to_string(cfg.G) + ")");
  if (cfg.K < 1) fail("K >= 1 (K = " + std::to_string(cfg.K) + ")");
  if (cfg.N < 1) fail("N >= 1 (N = " + std::to_string(cfg.N) + ")");
  if (cfg.M < 1) fail("M >= 1 (M = " + std::to_string(cfg.M) + ")");
  if (cfg.d < 1) fail("d >= 1 (d = " + std::to_string(cfg.d) + ")");
  if (!out.empty()) {
    return out;
  }
  const int focus = (cfg.G - 1) * cfg.K * cfg.d + cfg.d;
  if (cfg.M > focus) {
    fail("M <= (G-1)Kd + d (M = " + std::to_string(cfg.M) + ", bound " + std::to_string(focus) + ")");
  }
  if (cfg.N < cfg.K * cfg.d) {
    fail("N >= Kd (N = " + std::to_string(cfg.N) + ", Kd = " + std::to_string(cfg.K * cfg.d) + ")");
  }
  if (cfg.d > std::min(cfg.M, cfg.N)) {
    fail("d <= min(M, N) (d = " + std::to_string(cfg.d) + ")");
  }
  return out;
}

void validate_config(const NetworkConfig& cfg) {
  const auto bad = config_violations(cfg);
  if (bad.empty()) {
    return;
  }
  std::ostringstream msg;
  msg << "invalid network configuration:";
  for (const auto& b : bad) {
    msg << " violated " << b << ";";
  }
  throw std::invalid_argument(msg.str());
}

ChannelSet::ChannelSet(const NetworkConfig& cfg, std::vector<CMatrix> mats)
    : G_(cfg.G), K_(cfg.K), h_(std::move(mats)) {
  if (h_.size() != static_cast<std::size_t>(cfg.G) * cfg.K * cfg.G) {
    throw std::invalid_argument("ChannelSet: expected G*K*G matrices");
  }
  for (const auto& m : h_) {
    if (m.rows() != static_cast<std::size_t>(cfg.M) || m.cols() != static_cast<std::size_t>(cfg.N)) {
      throw std::invalid_argument("ChannelSet: every channel must be M x N");
    }
    if (!m.all_finite()) {
      throw std::invalid_argument("ChannelSet: non-finite channel entry");
    }
  }
}

ChannelSet draw_channels(const NetworkConfig& cfg, Rng& rng) {
  validate_config(cfg);
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(cfg.G) * cfg.K * cfg.G);
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      for (int i = 0; i < cfg.G; ++i) {
        mats.push_back(random_gaussian(cfg.M, cfg.N, rng));
      }
    }
  }
  return ChannelSet(cfg, std::move(mats));
}

}  // namespace iafb
