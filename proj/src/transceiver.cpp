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

#include "iafb/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "iafb/rng.hpp"

namespace iafb {

namespace {

void check_preconditions(const EffectiveCsiSet& eff, const FeedbackProfile& profile, const NetworkConfig& cfg) {
  const int kd = cfg.K * cfg.d;
  for (int i = 0; i < profile.g; ++i) {
    if (profile.n[i] < kd) {
      throw std::invalid_argument("ailm: n of BS " + std::to_string(i + 1) + " = " + std::to_string(profile.n[i]) +
                                  " < Kd = " + std::to_string(kd));
    }
  }
  for (int q = 0; q < cfg.num_ms(); ++q) {
    if (eff.a[q] < cfg.d) {
      throw std::invalid_argument("ailm: A of MS " + std::to_string(q + 1) + " = " + std::to_string(eff.a[q]) +
                                  " < d = " + std::to_string(cfg.d));
    }
  }
}

void update_receivers(const EffectiveCsiSet& eff, ReducedSolution& sol, const FeedbackProfile& profile,
                      const NetworkConfig& cfg) {
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      CMatrix gram(static_cast<std::size_t>(eff.a[q]), static_cast<std::size_t>(eff.a[q]));
      for (int i = 0; i < profile.g; ++i) {
        if (i != j) {
          add_outer_gram(gram, eff.effective(q, i) * sol.t_tilde[i]);
        }
      }
      sol.u_tilde[q] = smallest_eigvecs(gram, static_cast<std::size_t>(cfg.d));
    }
  }
}

void update_precoders(const EffectiveCsiSet& eff, ReducedSolution& sol, const FeedbackProfile& profile,
                      const NetworkConfig& cfg) {
  const auto kd = static_cast<std::size_t>(cfg.K * cfg.d);
  for (int i = 0; i < profile.g; ++i) {
    const auto n = static_cast<std::size_t>(profile.n[i]);
    CMatrix gram(n, n);
    for (int j = 0; j < cfg.G; ++j) {
      if (j == i) {
        continue;
      }
      for (int k = 0; k < cfg.K; ++k) {
        const int q = cfg.ms(j, k);
        add_outer_gram(gram, adjoint_times(eff.effective(q, i), sol.u_tilde[q]));
      }
    }
    sol.t_tilde[i] = smallest_eigvecs(gram, kd);
  }
}

ReducedSolution solve_once(const EffectiveCsiSet& eff, const FeedbackProfile& profile, const NetworkConfig& cfg,
                           const AilmOptions& opts, std::uint64_t seed) {
  Rng rng(seed);
  ReducedSolution sol;
  sol.seed = seed;
  sol.t_tilde.resize(static_cast<std::size_t>(cfg.G));
  sol.u_tilde.resize(static_cast<std::size_t>(cfg.num_ms()));
  for (int i = 0; i < profile.g; ++i) {
    sol.t_tilde[i] = random_semi_unitary(profile.n[i], cfg.K * cfg.d, rng);
  }
  for (int q = 0; q < cfg.num_ms(); ++q) {
    sol.u_tilde[q] = random_semi_unitary(eff.a[q], cfg.d, rng);
  }

  double current = leakage(eff, sol, profile, cfg);
  sol.leakage_trace.push_back(current);
  for (int it = 0; it < opts.max_iters && current >= opts.tol_leakage; ++it) {
    update_receivers(eff, sol, profile, cfg);
    update_precoders(eff, sol, profile, cfg);
    const double next = leakage(eff, sol, profile, cfg);
    sol.leakage_trace.push_back(next);
    const bool stalled = std::abs(current - next) <= opts.tol_rel_change * current;
    current = next;
    if (stalled) {
      break;
    }
  }
  sol.converged = current < opts.tol_leakage;
  return sol;
}

}  // namespace

double leakage(const EffectiveCsiSet& eff, const ReducedSolution& sol, const FeedbackProfile& profile,
               const NetworkConfig& cfg) {
  double total = 0.0;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      for (int i = 0; i < profile.g; ++i) {
        if (i != j) {
          total += (adjoint_times(sol.u_tilde[q], eff.effective(q, i)) * sol.t_tilde[i]).squared_norm();
        }
      }
    }
  }
  return total;
}

ReducedSolution ailm_solve(const EffectiveCsiSet& eff, const FeedbackProfile& profile, const NetworkConfig& cfg,
                           const AilmOptions& opts) {
  check_preconditions(eff, profile, cfg);
  ReducedSolution best = solve_once(eff, profile, cfg, opts, opts.seed);
  for (int r = 1; r <= opts.max_restarts && !best.converged; ++r) {
    ReducedSolution next = solve_once(eff, profile, cfg, opts, derive_seed(opts.seed, "ailm-restart", r));
    next.restarts = r;
    if (next.final_leakage() < best.final_leakage()) {
      best = std::move(next);
    } else {
      best.restarts = r;
    }
  }
  return best;
}

TransceiverSet reconstruct(const ReducedSolution& sol, const EffectiveCsiSet& eff, const OuterPrecoderSetII& t2,
                           const FeedbackProfile& profile, const NetworkConfig& cfg,
                           const ReconstructOptions& opts) {
  if (!(sol.final_leakage() <= opts.accept_leakage)) {
    throw std::runtime_error("reconstruct: solution not converged (leakage " + std::to_string(sol.final_leakage()) +
                             " > " + std::to_string(opts.accept_leakage) + ")");
  }
  const auto kd = static_cast<std::size_t>(cfg.K * cfg.d);
  const auto d = static_cast<std::size_t>(cfg.d);
  TransceiverSet ts;
  ts.t.resize(static_cast<std::size_t>(cfg.G));
  ts.v_s.resize(static_cast<std::size_t>(cfg.num_ms()));
  ts.u.resize(static_cast<std::size_t>(cfg.num_ms()));

  for (int i = 0; i < cfg.G; ++i) {
    ts.t[i] = profile.type_one(i) ? zero_pad_rows(sol.t_tilde[i], static_cast<std::size_t>(cfg.N)) : t2.at(i);
  }
  for (int q = 0; q < cfg.num_ms(); ++q) {
    ts.u[q] = zero_pad_rows(eff.r[q] * sol.u_tilde[q], static_cast<std::size_t>(cfg.M));
  }
  for (int j = 0; j < cfg.G; ++j) {
    // Rows of the intracell interference seen by the other MSs of cell j.
    std::vector<CMatrix> direct(static_cast<std::size_t>(cfg.K));
    for (int p = 0; p < cfg.K; ++p) {
      const int qp = cfg.ms(j, p);
      CMatrix x = adjoint_times(sol.u_tilde[qp], eff.effective(qp, j));
      direct[p] = profile.type_one(j) ? x * sol.t_tilde[j] : std::move(x);
    }
    for (int k = 0; k < cfg.K; ++k) {
      if (cfg.K == 1) {
        ts.v_s[cfg.ms(j, k)] = CMatrix::identity(kd).leading_cols(d);
        continue;
      }
      CMatrix gram(kd, kd);
      for (int p = 0; p < cfg.K; ++p) {
        if (p != k) {
          add_outer_gram(gram, direct[p].adjoint());
        }
      }
      ts.v_s[cfg.ms(j, k)] = smallest_eigvecs(gram, d);
    }
  }
  return ts;
}

IaReport verify_ia(const ChannelSet& channels, const TransceiverSet& ts, const NetworkConfig& cfg, double tol) {
  IaReport rep;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      const CMatrix& hjj = channels(j, k, j);
      const double hn = hjj.frobenius_norm();
      const CMatrix rx = adjoint_times(ts.u[q], hjj) * ts.t[j];

      const auto sv = singular_values(rx * ts.v_s[q]);
      const double smallest = sv.size() < static_cast<std::size_t>(cfg.d) ? 0.0 : sv.back();
      rep.min_signal_sv = std::min(rep.min_signal_sv, smallest / hn);

      for (int p = 0; p < cfg.K; ++p) {
        if (p != k) {
          rep.worst_intracell =
              std::max(rep.worst_intracell, (rx * ts.v_s[cfg.ms(j, p)]).frobenius_norm() / hn);
        }
      }
      for (int i = 0; i < cfg.G; ++i) {
        if (i != j) {
          const CMatrix& h = channels(j, k, i);
          rep.worst_intercell = std::max(
              rep.worst_intercell, (adjoint_times(ts.u[q], h) * ts.t[i]).frobenius_norm() / h.frobenius_norm());
        }
      }
    }
  }
  rep.rank_ok = rep.min_signal_sv > kRankTolerance;
  rep.intracell_ok = rep.worst_intracell < tol;
  rep.intercell_ok = rep.worst_intercell < tol;
  return rep;
}

TransceiverSet random_transceivers(const NetworkConfig& cfg, Rng& rng) {
  TransceiverSet ts;
  const int kd = cfg.K * cfg.d;
  for (int i = 0; i < cfg.G; ++i) {
    ts.t.push_back(random_semi_unitary(cfg.N, kd, rng));
  }
  for (int q = 0; q < cfg.num_ms(); ++q) {
    ts.v_s.push_back(random_semi_unitary(kd, cfg.d, rng));
    ts.u.push_back(random_semi_unitary(cfg.M, cfg.d, rng));
  }
  return ts;
}

}  // namespace iafb
