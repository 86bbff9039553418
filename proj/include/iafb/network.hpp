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

#include <cstddef>
#include <string>
#include <vector>

#include "iafb/cmatrix.hpp"

namespace iafb {

class Rng;

/// Cellular MIMO downlink topology: G cells, K mobiles per cell, N antennas
/// per base station, M per mobile, d streams per mobile.
struct NetworkConfig {
  int G = 0;
  int K = 0;
  int N = 0;
  int M = 0;
  int d = 0;

  int num_ms() const { return G * K; }
  /// Flat mobile index of MS k in cell j (0-based).
  int ms(int j, int k) const { return j * K + k; }
  bool operator==(const NetworkConfig&) const = default;
};

/// Every violated invariant as a readable inequality; empty when valid.
std::vector<std::string> config_violations(const NetworkConfig& cfg);
/// Throws std::invalid_argument listing all violations.
void validate_config(const NetworkConfig& cfg);

/// H_{jk,i}: channel from BS i to MS k of cell j, M x N each.
class ChannelSet {
 public:
  ChannelSet() = default;
  ChannelSet(const NetworkConfig& cfg, std::vector<CMatrix> mats);

  const CMatrix& operator()(int j, int k, int i) const { return h_[index(j, k, i)]; }
  CMatrix& operator()(int j, int k, int i) { return h_[index(j, k, i)]; }

  int G() const { return G_; }
  int K() const { return K_; }

 private:
  std::size_t index(int j, int k, int i) const {
    return (static_cast<std::size_t>(j) * K_ + k) * G_ + i;
  }

  int G_ = 0;
  int K_ = 0;
  std::vector<CMatrix> h_;
};

/// i.i.d. CN(0, 1) entries, drawn in (j, k, i, row, col) order.
ChannelSet draw_channels(const NetworkConfig& cfg, Rng& rng);

}  // namespace iafb
