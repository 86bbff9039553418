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

#include "iafb/feedback.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "iafb/rng.hpp"

namespace iafb {

namespace {

int type_two_others(const FeedbackProfile& profile, const NetworkConfig& cfg, int j) {
  return cfg.G - profile.g - (profile.type_one(j) ? 0 : 1);
}

std::string ms_label(int j, int k) {
  return "MS (" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

}  // namespace

FeedbackProfile FeedbackProfile::uniform(const NetworkConfig& cfg, int m_all, int g, std::vector<int> n) {
  FeedbackProfile p;
  p.m.assign(static_cast<std::size_t>(cfg.num_ms()), m_all);
  p.g = g;
  p.n = std::move(n);
  return p;
}

void validate_profile(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  if (profile.m.size() != static_cast<std::size_t>(cfg.num_ms())) {
    throw std::invalid_argument("profile: expected " + std::to_string(cfg.num_ms()) + " m entries, got " +
                                std::to_string(profile.m.size()));
  }
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int m = profile.m_at(cfg, j, k);
      if (m < 1 || m > cfg.M) {
        throw std::invalid_argument("profile: m of " + ms_label(j, k) + " = " + std::to_string(m) +
                                    " outside 1.." + std::to_string(cfg.M));
      }
    }
  }
  if (profile.g < 0 || profile.g > cfg.G) {
    throw std::invalid_argument("profile: g = " + std::to_string(profile.g) + " outside 0.." +
                                std::to_string(cfg.G));
  }
  if (profile.n.size() != static_cast<std::size_t>(profile.g)) {
    throw std::invalid_argument("profile: expected g = " + std::to_string(profile.g) + " n entries, got " +
                                std::to_string(profile.n.size()));
  }
  for (int i = 0; i < profile.g; ++i) {
    if (profile.n[i] < 1 || profile.n[i] > cfg.N) {
      throw std::invalid_argument("profile: n of BS " + std::to_string(i + 1) + " = " +
                                  std::to_string(profile.n[i]) + " outside 1.." + std::to_string(cfg.N));
    }
  }
}

FeedbackProfile full_cdi_profile(const NetworkConfig& cfg) {
  return FeedbackProfile::uniform(cfg, cfg.M, cfg.G, std::vector<int>(static_cast<std::size_t>(cfg.G), cfg.N));
}

FeedbackProfile truncated_cdi_profile(const NetworkConfig& cfg) {
  const int m = std::max(cfg.G * cfg.K * cfg.d + cfg.d - cfg.N, cfg.d);
  if (m > cfg.M) {
    throw std::invalid_argument("truncated CDI: m = GKd + d - N = " + std::to_string(m) + " exceeds M = " +
                                std::to_string(cfg.M));
  }
  return FeedbackProfile::uniform(cfg, m, cfg.G, std::vector<int>(static_cast<std::size_t>(cfg.G), cfg.N));
}

CMatrix csi_submatrix(const CMatrix& h, int rows, int cols) {
  if (rows < 0 || cols < 0 || static_cast<std::size_t>(rows) > h.rows() ||
      static_cast<std::size_t>(cols) > h.cols()) {
    throw std::out_of_range("csi_submatrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  }
  return h.block(0, 0, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
}

int a_dim(const FeedbackProfile& profile, const NetworkConfig& cfg, int j, int k) {
  return profile.m_at(cfg, j, k) - type_two_others(profile, cfg, j) * cfg.K * cfg.d;
}

std::vector<GrassmannEntry> grassmann_tuple(const FeedbackProfile& profile, const NetworkConfig& cfg,
                                            int j, int k) {
  const int a = a_dim(profile, cfg, j, k);
  if (a < 1) {
    throw std::invalid_argument("grassmann_tuple: A of " + ms_label(j, k) + " = " + std::to_string(a) +
                                " < 1");
  }
  std::vector<GrassmannEntry> out;
  for (int i = 0; i < profile.g; ++i) {
    out.push_back({i, 1, profile.n[i] * a});
  }
  if (!profile.type_one(j)) {
    out.push_back({j, 1, cfg.K * cfg.d * a});
  }
  return out;
}

std::int64_t feedback_dimension(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  std::int64_t total = 0;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int a = a_dim(profile, cfg, j, k);
      if (a < 1) {
        throw std::invalid_argument("feedback_dimension: A of " + ms_label(j, k) + " = " +
                                    std::to_string(a) + " < 1");
      }
      for (int i = 0; i < profile.g; ++i) {
        total += static_cast<std::int64_t>(profile.n[i]) * a - 1;
      }
      if (!profile.type_one(j)) {
        total += static_cast<std::int64_t>(cfg.K) * cfg.d * a - 1;
      }
    }
  }
  return total;
}

OuterPrecoderSetII fixed_outer_precoders(const NetworkConfig& cfg, const FeedbackProfile& profile, Rng& rng) {
  const int kd = cfg.K * cfg.d;
  if (cfg.N < kd) {
    throw std::invalid_argument("fixed_outer_precoders: N = " + std::to_string(cfg.N) + " < Kd = " +
                                std::to_string(kd));
  }
  OuterPrecoderSetII out;
  out.t2.resize(static_cast<std::size_t>(cfg.G));
  for (int i = profile.g; i < cfg.G; ++i) {
    out.t2[i] = random_semi_unitary(cfg.N, kd, rng);
  }
  return out;
}

EffectiveCsiSet apply_filter(const ChannelSet& channels, const FeedbackProfile& profile,
                             const OuterPrecoderSetII& t2, const NetworkConfig& cfg) {
  validate_profile(profile, cfg);
  EffectiveCsiSet eff;
  eff.G = cfg.G;
  eff.K = cfg.K;
  eff.r.resize(static_cast<std::size_t>(cfg.num_ms()));
  eff.a.resize(static_cast<std::size_t>(cfg.num_ms()));
  eff.he.resize(static_cast<std::size_t>(cfg.num_ms()) * cfg.G);

  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      const int m = profile.m_at(cfg, j, k);
      const int a = a_dim(profile, cfg, j, k);
      if (a < 1) {
        throw std::invalid_argument("apply_filter: A of " + ms_label(j, k) + " = " + std::to_string(a) +
                                    " < 1");
      }

      std::vector<CMatrix> nulled;
      for (int i = profile.g; i < cfg.G; ++i) {
        if (i != j) {
          nulled.push_back(csi_submatrix(channels(j, k, i), m, cfg.N) * t2.at(i));
        }
      }
      CMatrix r = nulled.empty() ? CMatrix::identity(static_cast<std::size_t>(m)) : left_null_space(hstack(nulled));
      if (r.cols() != static_cast<std::size_t>(a)) {
        throw std::runtime_error("apply_filter: degenerate channel at " + ms_label(j, k) +
                                 ", null space has dimension " + std::to_string(r.cols()) + " instead of " +
                                 std::to_string(a));
      }

      auto store = [&](int i, const CMatrix& h) {
        const double norm = h.frobenius_norm();
        if (!(norm > 0.0)) {
          throw std::runtime_error("apply_filter: zero effective channel at " + ms_label(j, k));
        }
        eff.effective(q, i) = (1.0 / norm) * h;
      };
      for (int i = 0; i < profile.g; ++i) {
        store(i, adjoint_times(r, csi_submatrix(channels(j, k, i), m, profile.n[i])));
      }
      if (!profile.type_one(j)) {
        store(j, adjoint_times(r, csi_submatrix(channels(j, k, j), m, cfg.N) * t2.at(j)));
      }
      eff.r[q] = std::move(r);
      eff.a[q] = a;
    }
  }
  return eff;
}

}  // namespace iafb
