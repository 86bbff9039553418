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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iafb/evaluate.hpp"
#include "iafb/feedback.hpp"
#include "iafb/network.hpp"

namespace iafb {

enum class Scheme { kProposed, kBaseline1, kBaseline2, kBaseline3 };

std::string_view scheme_name(Scheme s);
/// Accepts proposed, baseline1, baseline2, baseline3.
Scheme parse_scheme(std::string_view name);

/// How the total feedback budget B_tot is set at each SNR.
struct BitRule {
  enum class Kind { kFixed, kScaled, kUnquantized };
  Kind kind = Kind::kFixed;
  std::int64_t fixed_bits = 0;
  /// kScaled: B_tot = floor(D log2 P) with this D; the scheme's own D when unset.
  std::optional<std::int64_t> scale_dimension;

  static BitRule fixed(std::int64_t bits) { return {Kind::kFixed, bits, std::nullopt}; }
  static BitRule scaled(std::optional<std::int64_t> dim = std::nullopt) { return {Kind::kScaled, 0, dim}; }
  static BitRule unquantized() { return {Kind::kUnquantized, 0, std::nullopt}; }
};

struct ExperimentSpec {
  NetworkConfig config;
  std::vector<Scheme> schemes{Scheme::kProposed};
  std::optional<FeedbackProfile> profile;  // proposed scheme only; greedy when unset
  std::vector<double> snr_grid_db;
  BitRule rule;
  int trials = 500;
  std::uint64_t seed = 1;
  std::string output;
};

/// Throws std::invalid_argument on an empty or non-increasing SNR grid,
/// trials < 1, or an invalid configuration.
void validate_experiment(const ExperimentSpec& spec);

/// Profile a scheme feeds back with; nullopt for random beamforming.
std::optional<FeedbackProfile> scheme_profile(Scheme scheme, const NetworkConfig& cfg,
                                              const std::optional<FeedbackProfile>& proposed = std::nullopt);

struct SchemeResult {
  Scheme scheme = Scheme::kProposed;
  std::int64_t feedback_dim = 0;
  std::vector<ThroughputSample> samples;  // one per SNR point
};

/// B_tot used at one SNR point.
std::int64_t total_bits(const BitRule& rule, std::int64_t own_dimension, double snr_db);

/// Runs every trial of one scheme across the SNR grid. Trial t draws its
/// channels from derive_seed(seed, "trial", t), so all schemes of one spec see
/// the same channels. Throws std::domain_error if the profile is infeasible.
SchemeResult run_scheme(const ExperimentSpec& spec, Scheme scheme);

std::vector<SchemeResult> run_experiment(const ExperimentSpec& spec);

/// One ThroughputSample of a baseline (1, 2 or 3) at a single SNR.
ThroughputSample run_baseline(int id, const NetworkConfig& cfg, double snr_db, std::int64_t b_tot, int trials,
                              std::uint64_t seed);

/// Columns: scheme, snr_db, b_tot, trials, r_per_mean, r_lim_mean, r_lb_mean,
/// stderr, leakage_mean, feedback_dim.
void write_results_csv(std::ostream& out, std::span<const SchemeResult> results);

/// Columns: iter, I.
void write_trace_csv(std::ostream& out, std::span<const double> trace);

}  // namespace iafb
