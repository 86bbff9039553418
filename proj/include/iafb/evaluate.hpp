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
#include <span>
#include <vector>

#include "iafb/cmatrix.hpp"
#include "iafb/feedback.hpp"
#include "iafb/network.hpp"
#include "iafb/transceiver.hpp"

namespace iafb {

/// Linear transmit power from decibels.
double snr_linear(double snr_db);

/// Phi_jk = (P/Kd) sum over streams (i,p) != (j,k) of X X^H with
/// X = U_jk^H H_{jk,i} T_i V^s_ip. One d x d matrix per MS.
std::vector<CMatrix> residual_interference(const ChannelSet& channels, const TransceiverSet& ts,
                                           const NetworkConfig& cfg, double power);

/// sum_jk log2 det(I + (P/Kd) S S^H), S = U^H H_{jk,j} T_j V^s_jk.
double throughput_perfect(const ChannelSet& channels, const TransceiverSet& ts, const NetworkConfig& cfg,
                          double power);

/// sum_jk log2 det(I + (P/Kd) S S^H (I + Phi_jk)^-1).
double throughput_limited(const ChannelSet& channels, const TransceiverSet& ts, std::span<const CMatrix> phis,
                          const NetworkConfig& cfg, double power);

/// c_jk = sum over the MS's Grassmannian entries of (B - 1), per MS.
std::vector<int> leakage_constants(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// (P/d) c_jk 2^-b, per MS.
std::vector<double> leakage_bound(const FeedbackProfile& profile, const NetworkConfig& cfg, double power,
                                  double b);

/// r_per - sum_jk d log2(1 + (P/d^2) c_jk 2^-b).
double throughput_lower_bound(double r_per, const FeedbackProfile& profile, const NetworkConfig& cfg,
                              double power, double b);

/// Monte Carlo summary at one SNR. The per-trial vectors are kept so that
/// slopes and paired differences can carry standard errors.
struct ThroughputSample {
  double snr_db = 0.0;
  std::int64_t b_tot = 0;
  int trials = 0;
  double r_per = 0.0;
  double r_lim = 0.0;
  double r_lb = 0.0;
  double stderr_lim = 0.0;  // standard error of r_lim
  double leakage_mean = 0.0;
  std::vector<double> r_lim_trials;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Least-squares slope of mean R_lim against log2 P. Throws unless there are
/// at least 3 points spanning at least 15 dB.
double dof_slope(std::span<const ThroughputSample> sweep);

/// Same slope with the standard error of the per-trial slopes. Needs at
/// least 2 points and identical trial counts.
Estimate slope_with_error(std::span<const ThroughputSample> sweep);

/// Mean and standard error of a sample.
Estimate mean_with_error(std::span<const double> xs);

}  // namespace iafb
