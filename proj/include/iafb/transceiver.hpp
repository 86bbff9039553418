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
#include <limits>
#include <vector>

#include "iafb/cmatrix.hpp"
#include "iafb/feedback.hpp"
#include "iafb/network.hpp"

namespace iafb {

/// Reduced-space transceivers acting on effective CSI.
struct ReducedSolution {
  std::vector<CMatrix> t_tilde;       // per BS, n_i x Kd; empty for type-II BSs
  std::vector<CMatrix> u_tilde;       // per MS, A_jk x d
  std::vector<double> leakage_trace;  // initial value, then one per iteration
  bool converged = false;             // final leakage below tol_leakage
  int restarts = 0;                   // restarts consumed before returning
  std::uint64_t seed = 0;             // seed of the returned run

  double final_leakage() const { return leakage_trace.empty() ? 0.0 : leakage_trace.back(); }
};

struct AilmOptions {
  int max_iters = 2000;
  double tol_leakage = 1e-10;
  double tol_rel_change = 1e-12;
  int max_restarts = 5;
  std::uint64_t seed = 0;
};

/// Sum over MSs (j,k) and type-I BSs i != j of ||U~_jk^H H^e_{jk,i} T~_i||_F^2.
double leakage(const EffectiveCsiSet& eff, const ReducedSolution& sol, const FeedbackProfile& profile,
               const NetworkConfig& cfg);

/// Alternating leakage minimisation from a random start. On failure to reach
/// tol_leakage it restarts from seeds derive_seed(seed, "ailm-restart", r) and
/// returns the run with the lowest final leakage.
ReducedSolution ailm_solve(const EffectiveCsiSet& eff, const FeedbackProfile& profile, const NetworkConfig& cfg,
                           const AilmOptions& opts = {});

/// Full-size transceivers: precoder of MS (j,k) is t[j] * v_s[q].
struct TransceiverSet {
  std::vector<CMatrix> t;    // per BS, N x Kd
  std::vector<CMatrix> v_s;  // per MS, Kd x d
  std::vector<CMatrix> u;    // per MS, M x d

  CMatrix precoder(int j, int q) const { return t[static_cast<std::size_t>(j)] * v_s[static_cast<std::size_t>(q)]; }
};

struct ReconstructOptions {
  /// Solutions whose final leakage exceeds this are refused.
  double accept_leakage = 1e-8;
};

/// Lifts a reduced solution to full-size transceivers. Reads effective CSI
/// only, never the channels themselves.
TransceiverSet reconstruct(const ReducedSolution& sol, const EffectiveCsiSet& eff, const OuterPrecoderSetII& t2,
                           const FeedbackProfile& profile, const NetworkConfig& cfg,
                           const ReconstructOptions& opts = {});

/// Worst residual per IA constraint family.
struct IaReport {
  double min_signal_sv = std::numeric_limits<double>::infinity();  // relative to ||H_{jk,j}||_F
  double worst_intracell = 0.0;                                    // relative to ||H_{jk,j}||_F
  double worst_intercell = 0.0;                                    // relative to ||H_{jk,i}||_F
  bool rank_ok = true;
  bool intracell_ok = true;
  bool intercell_ok = true;

  bool ok() const { return rank_ok && intracell_ok && intercell_ok; }
};

inline constexpr double kRankTolerance = 1e-6;

IaReport verify_ia(const ChannelSet& channels, const TransceiverSet& ts, const NetworkConfig& cfg, double tol);

/// Haar-random T, V^s and U with no alignment.
TransceiverSet random_transceivers(const NetworkConfig& cfg, Rng& rng);

}  // namespace iafb
