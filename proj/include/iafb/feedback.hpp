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

#include "iafb/cmatrix.hpp"
#include "iafb/network.hpp"

namespace iafb {

class Rng;

/// CSI filtering profile: MS (j,k) feeds back its first m_jk antennas, BSs
/// 0..g-1 are type I (adaptive outer precoder, first n_i antennas fed back)
/// and BSs g..G-1 are type II (fixed outer precoder).
struct FeedbackProfile {
  std::vector<int> m;  // per MS, flat index NetworkConfig::ms(j, k)
  int g = 0;
  std::vector<int> n;  // per type-I BS, length g

  static FeedbackProfile uniform(const NetworkConfig& cfg, int m_all, int g, std::vector<int> n);

  int m_at(const NetworkConfig& cfg, int j, int k) const { return m[cfg.ms(j, k)]; }
  bool type_one(int i) const { return i < g; }
  bool operator==(const FeedbackProfile&) const = default;
};

/// Throws std::invalid_argument unless shapes match cfg, 1 <= m_jk <= M,
/// 0 <= g <= G and 1 <= n_i <= N. n_i < Kd is representable (and infeasible).
void validate_profile(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// m = M, g = G, n = N: every MS feeds back its full channel directions.
FeedbackProfile full_cdi_profile(const NetworkConfig& cfg);
/// g = G, n = N, m = GKd + d - N raised to at least d. Throws if m > M.
FeedbackProfile truncated_cdi_profile(const NetworkConfig& cfg);

/// Top-left rows x cols block.
CMatrix csi_submatrix(const CMatrix& h, int rows, int cols);

/// A_jk = m_jk - |B^II \ {j}| K d. May be <= 0.
int a_dim(const FeedbackProfile& profile, const NetworkConfig& cfg, int j, int k);

/// One fed-back line in C^ambient.
struct GrassmannEntry {
  int source = 0;        // BS index i of H^e_{jk,i}
  int subspace_dim = 1;  // always 1: channel direction
  int ambient = 0;       // B_{jk,i}
};

/// Entries for i in B^I, then the direct link when j is type II.
std::vector<GrassmannEntry> grassmann_tuple(const FeedbackProfile& profile, const NetworkConfig& cfg,
                                            int j, int k);

/// Total Grassmannian dimension D(L). Throws if some A_jk < 1.
std::int64_t feedback_dimension(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Fixed N x Kd outer precoders of the type-II BSs; entries i < g are empty.
struct OuterPrecoderSetII {
  std::vector<CMatrix> t2;

  const CMatrix& at(int i) const { return t2[static_cast<std::size_t>(i)]; }
};

OuterPrecoderSetII fixed_outer_precoders(const NetworkConfig& cfg, const FeedbackProfile& profile, Rng& rng);

/// Filter outputs of every MS. he(q, i) is stored with unit Frobenius norm and
/// is non-empty for i in B^I, and for i = j when j is type II.
struct EffectiveCsiSet {
  int G = 0;
  int K = 0;
  std::vector<CMatrix> r;   // per MS, m_jk x A_jk
  std::vector<int> a;       // per MS
  std::vector<CMatrix> he;  // per (MS, BS), flat q * G + i

  const CMatrix& effective(int q, int i) const { return he[static_cast<std::size_t>(q) * G + i]; }
  CMatrix& effective(int q, int i) { return he[static_cast<std::size_t>(q) * G + i]; }
};

/// Throws std::invalid_argument if some A_jk < 1 and std::runtime_error if a
/// null space has the wrong dimension (degenerate channel).
EffectiveCsiSet apply_filter(const ChannelSet& channels, const FeedbackProfile& profile,
                             const OuterPrecoderSetII& t2, const NetworkConfig& cfg);

}  // namespace iafb
