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

#include "iafb/evaluate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace iafb {

namespace {

void check_power(double power) {
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("power must be finite and non-negative");
  }
}

CMatrix signal_matrix(const ChannelSet& channels, const TransceiverSet& ts, int j, int k, int q) {
  return adjoint_times(ts.u[q], channels(j, k, j)) * ts.precoder(j, q);
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    mx += x[t];
    my += y[t];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    sxy += (x[t] - mx) * (y[t] - my);
    sxx += (x[t] - mx) * (x[t] - mx);
  }
  return sxy / sxx;
}

std::vector<double> log2_powers(std::span<const ThroughputSample> sweep) {
  std::vector<double> x;
  for (const auto& s : sweep) {
    x.push_back(s.snr_db * std::log2(10.0) / 10.0);
  }
  return x;
}

}  // namespace

double snr_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

std::vector<CMatrix> residual_interference(const ChannelSet& channels, const TransceiverSet& ts,
                                           const NetworkConfig& cfg, double power) {
  check_power(power);
  const double scale = power / (cfg.K * cfg.d);
  std::vector<CMatrix> phis;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      CMatrix phi(static_cast<std::size_t>(cfg.d), static_cast<std::size_t>(cfg.d));
      for (int i = 0; i < cfg.G; ++i) {
        const CMatrix y = adjoint_times(ts.u[q], channels(j, k, i)) * ts.t[i];
        for (int p = 0; p < cfg.K; ++p) {
          if (i == j && p == k) {
            continue;
          }
          add_outer_gram(phi, y * ts.v_s[cfg.ms(i, p)]);
        }
      }
      phis.push_back(cd(scale, 0.0) * phi);
    }
  }
  return phis;
}

double throughput_perfect(const ChannelSet& channels, const TransceiverSet& ts, const NetworkConfig& cfg,
                          double power) {
  check_power(power);
  const double scale = power / (cfg.K * cfg.d);
  const auto eye = CMatrix::identity(static_cast<std::size_t>(cfg.d));
  double total = 0.0;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const CMatrix s = signal_matrix(channels, ts, j, k, cfg.ms(j, k));
      total += log2_det_hpd(eye + cd(scale, 0.0) * times_adjoint(s, s));
    }
  }
  return total;
}

double throughput_limited(const ChannelSet& channels, const TransceiverSet& ts, std::span<const CMatrix> phis,
                          const NetworkConfig& cfg, double power) {
  check_power(power);
  if (phis.size() != static_cast<std::size_t>(cfg.num_ms())) {
    throw std::invalid_argument("throughput_limited: expected one interference matrix per MS");
  }
  const double scale = power / (cfg.K * cfg.d);
  const auto eye = CMatrix::identity(static_cast<std::size_t>(cfg.d));
  double total = 0.0;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      const CMatrix s = signal_matrix(channels, ts, j, k, q);
      const CMatrix noise = eye + phis[q];
      total += log2_det_hpd(noise + cd(scale, 0.0) * times_adjoint(s, s)) - log2_det_hpd(noise);
    }
  }
  return total;
}

std::vector<int> leakage_constants(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  std::vector<int> out;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      int c = 0;
      for (const auto& e : grassmann_tuple(profile, cfg, j, k)) {
        c += e.ambient - 1;
      }
      out.push_back(c);
    }
  }
  return out;
}

std::vector<double> leakage_bound(const FeedbackProfile& profile, const NetworkConfig& cfg, double power,
                                  double b) {
  check_power(power);
  std::vector<double> out;
  for (int c : leakage_constants(profile, cfg)) {
    out.push_back(power / cfg.d * c * std::exp2(-b));
  }
  return out;
}

double throughput_lower_bound(double r_per, const FeedbackProfile& profile, const NetworkConfig& cfg,
                              double power, double b) {
  check_power(power);
  double penalty = 0.0;
  const double d = cfg.d;
  for (int c : leakage_constants(profile, cfg)) {
    penalty += d * std::log2(1.0 + power / (d * d) * c * std::exp2(-b));
  }
  return r_per - penalty;
}

double dof_slope(std::span<const ThroughputSample> sweep) {
  if (sweep.size() < 3) {
    throw std::invalid_argument("dof_slope: need at least 3 SNR points, got " + std::to_string(sweep.size()));
  }
  if (sweep.back().snr_db - sweep.front().snr_db < 15.0) {
    throw std::invalid_argument("dof_slope: SNR points must span at least 15 dB");
  }
  std::vector<double> y;
  for (const auto& s : sweep) {
    y.push_back(s.r_lim);
  }
  return least_squares_slope(log2_powers(sweep), y);
}

Estimate slope_with_error(std::span<const ThroughputSample> sweep) {
  if (sweep.size() < 2) {
    throw std::invalid_argument("slope_with_error: need at least 2 SNR points");
  }
  const std::size_t trials = sweep.front().r_lim_trials.size();
  for (const auto& s : sweep) {
    if (s.r_lim_trials.size() != trials) {
      throw std::invalid_argument("slope_with_error: per-trial vectors differ in length");
    }
  }
  const auto x = log2_powers(sweep);
  std::vector<double> slopes;
  std::vector<double> y(sweep.size());
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t s = 0; s < sweep.size(); ++s) {
      y[s] = sweep[s].r_lim_trials[t];
    }
    slopes.push_back(least_squares_slope(x, y));
  }
  return mean_with_error(slopes);
}

Estimate mean_with_error(std::span<const double> xs) {
  Estimate out;
  if (xs.empty()) {
    return out;
  }
  double sum = 0.0;
  for (double v : xs) {
    sum += v;
  }
  out.value = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double v : xs) {
      ss += (v - out.value) * (v - out.value);
    }
    out.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  }
  return out;
}

}  // namespace iafb
