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

// One PASS/FAIL line per acceptance criterion. Arguments select criteria by
// number; no arguments runs all of them. Exit status is nonzero if any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "iafb/evaluate.hpp"
#include "iafb/experiment.hpp"
#include "iafb/feasibility.hpp"
#include "iafb/feedback.hpp"
#include "iafb/profile_opt.hpp"
#include "iafb/quantize.hpp"
#include "iafb/rng.hpp"
#include "iafb/transceiver.hpp"

namespace {

using namespace iafb;

const NetworkConfig kThreeCell{3, 2, 4, 4, 1};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome feedback_dimensions() {
  const std::vector<std::pair<std::int64_t, std::int64_t>> got{
      {feedback_dimension(FeedbackProfile::uniform({2, 2, 3, 3, 1}, 3, 0, {}), {2, 2, 3, 3, 1}), 4},
      {feedback_dimension(FeedbackProfile::uniform({2, 3, 5, 3, 1}, 2, 2, {5, 5}), {2, 3, 5, 3, 1}), 108},
      {feedback_dimension(FeedbackProfile::uniform(kThreeCell, 4, 2, {4, 3}), kThreeCell), 114},
      {feedback_dimension(full_cdi_profile(kThreeCell), kThreeCell), 270},
      {feedback_dimension(truncated_cdi_profile(kThreeCell), kThreeCell), 198},
  };
  Outcome o{true, "D ="};
  for (const auto& [d, want] : got) {
    o.pass = o.pass && d == want;
    o.detail += format(" %lld", static_cast<long long>(d));
  }
  o.detail += " (want 4 108 114 270 198)";
  return o;
}

Outcome greedy_reproduction() {
  const GreedyResult r = greedy_profile(kThreeCell);
  std::vector<int> n = r.profile.n;
  std::sort(n.begin(), n.end());
  const bool m_ok = r.profile.m == std::vector<int>(6, 4);
  Outcome o;
  o.pass = r.g0 == 2 && r.profile.g == 2 && m_ok && n == std::vector<int>{3, 4};
  o.detail = format("g0 = %d, g = %d, all m = 4: %s, n = (%d, %d), D = %lld", r.g0, r.profile.g,
                    m_ok ? "yes" : "no", r.profile.n[0], r.profile.n[1],
                    static_cast<long long>(feedback_dimension(r.profile, kThreeCell)));
  return o;
}

Outcome oracle_equivalence() {
  long profiles = 0;
  long feasible = 0;
  long disagreements = 0;
  long configs = 0;
  for (int G = 1; G <= 3; ++G) {
    for (int K = 1; K <= 2; ++K) {
      for (int d = 1; d <= 2; ++d) {
        for (int N = 1; N <= 5; ++N) {
          for (int M = 1; M <= 5; ++M) {
            const NetworkConfig cfg{G, K, N, M, d};
            if (!config_violations(cfg).empty()) continue;
            ++configs;
            const int q_count = cfg.num_ms();
            std::vector<int> m(static_cast<std::size_t>(q_count), 1);
            while (true) {
              for (int g = 0; g <= G; ++g) {
                std::vector<int> n(static_cast<std::size_t>(g), 1);
                while (true) {
                  const FeedbackProfile p{m, g, n};
                  const bool by_enum = check_necessary_enum(p, cfg).necessary_ok;
                  const bool by_flow = check_necessary_flow(p, cfg).necessary_ok;
                  disagreements += by_enum != by_flow;
                  feasible += by_flow;
                  ++profiles;
                  int pos = 0;
                  while (pos < g && n[pos] == N) n[pos++] = 1;
                  if (pos == g) break;
                  ++n[pos];
                }
              }
              int pos = 0;
              while (pos < q_count && m[pos] == M) m[pos++] = 1;
              if (pos == q_count) break;
              ++m[pos];
            }
          }
        }
      }
    }
  }
  Outcome o;
  o.pass = disagreements == 0 && profiles > 10000;
  o.detail = format("%ld configs, %ld profiles (%ld feasible), %ld disagreements", configs, profiles, feasible,
                    disagreements);
  return o;
}

Outcome greedy_sufficiency() {
  long configs = 0;
  long insufficient = 0;
  long bound_broken = 0;
  long raised = 0;
  long unachievable = 0;
  for (int G = 2; G <= 5; ++G) {
    for (int K = 1; K <= 3; ++K) {
      for (int d = 1; d <= 2; ++d) {
        for (int N = K * d; N <= G * K * d + d; ++N) {
          for (int M = d; M <= (G - 1) * K * d + d; ++M) {
            const NetworkConfig cfg{G, K, N, M, d};
            if (!config_violations(cfg).empty() || n_zero(cfg) <= K * d) continue;
            if (g_zero(cfg) > G) {
              ++unachievable;
              continue;
            }
            ++configs;
            const GreedyResult r = greedy_profile(cfg);
            insufficient += !check_sufficient(r.profile, cfg).sufficient_ok;
            bound_broken += d_lower_bound(cfg) > feedback_dimension(r.profile, cfg);
            raised += r.profile.g > r.g0;
          }
        }
      }
    }
  }
  Outcome o;
  o.pass = insufficient == 0 && bound_broken == 0 && configs > 0;
  o.detail = format("%ld configs: %ld not sufficient, %ld with D_low > D; g raised above g0 on %ld; "
                    "%ld skipped with g0 > G",
                    configs, insufficient, bound_broken, raised, unachievable);
  return o;
}

Outcome ailm_convergence() {
  const FeedbackProfile profile = FeedbackProfile::uniform(kThreeCell, 4, 2, {4, 3});
  const std::uint64_t seed = 2026;
  Rng outer(derive_seed(seed, "outer-precoders"));
  const OuterPrecoderSetII t2 = fixed_outer_precoders(kThreeCell, profile, outer);
  int converged = 0;
  int monotone = 0;
  int verified = 0;
  int restarts = 0;
  double worst = 0.0;
  const int runs = 50;
  for (int t = 0; t < runs; ++t) {
    const std::uint64_t trial = derive_seed(seed, "trial", static_cast<std::uint64_t>(t));
    Rng rng(derive_seed(trial, "channels"));
    const ChannelSet h = draw_channels(kThreeCell, rng);
    const EffectiveCsiSet eff = apply_filter(h, profile, t2, kThreeCell);
    AilmOptions opts;
    opts.seed = derive_seed(trial, "ailm");
    opts.tol_leakage = 1e-20;
    opts.max_iters = 20000;
    const ReducedSolution sol = ailm_solve(eff, profile, kThreeCell, opts);
    restarts += sol.restarts;
    worst = std::max(worst, sol.final_leakage());
    bool mono = true;
    for (std::size_t n = 1; n < sol.leakage_trace.size(); ++n) {
      mono = mono && sol.leakage_trace[n] <= sol.leakage_trace[n - 1] + 1e-12;
    }
    monotone += mono;
    if (sol.final_leakage() < 1e-9) {
      ++converged;
      const TransceiverSet ts = reconstruct(sol, eff, t2, profile, kThreeCell);
      verified += verify_ia(h, ts, kThreeCell, 1e-7).ok();
    }
  }
  Outcome o;
  o.pass = converged >= 49 && monotone == runs && verified == converged;
  o.detail = format("%d/%d below 1e-9 (worst %.2e, %d restarts), %d/%d monotone, %d/%d pass verify_ia at 1e-7",
                    converged, runs, worst, restarts, monotone, runs, verified, converged);
  return o;
}

Outcome quantization_scaling() {
  const QuantizeOptions q;
  const int draws = 10000;
  // Explicit codebooks are redrawn every 100 channel draws.
  const int per_codebook = 100;
  Outcome o{true, ""};
  for (int ambient : {6, 8, 12}) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (int b = 2; b <= 8; ++b) {
      Rng rng(derive_seed(7, "distortion", static_cast<std::uint64_t>(ambient * 100 + b)));
      const int bits = b * (ambient - 1);
      double sum = 0.0;
      if (bits <= q.max_explicit_bits) {
        for (int c = 0; c < draws / per_codebook; ++c) {
          const Codebook cb = build_codebook(ambient, bits, rng);
          for (int t = 0; t < per_codebook; ++t) {
            sum += quantize_matrix(random_gaussian(static_cast<std::size_t>(ambient), 1, rng), cb).distortion;
          }
        }
      } else {
        for (int t = 0; t < draws; ++t) {
          sum += quantize_sampled(random_gaussian(static_cast<std::size_t>(ambient), 1, rng), bits, rng).distortion;
        }
      }
      xs.push_back(b);
      ys.push_back(std::log2(sum / draws));
    }
    const double xm = 5.0;
    double ym = 0.0;
    for (double y : ys) ym += y;
    ym /= static_cast<double>(ys.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - xm) * (ys[i] - ym);
      sxx += (xs[i] - xm) * (xs[i] - xm);
    }
    const double slope = sxy / sxx;
    o.pass = o.pass && std::abs(slope + 1.0) <= 0.15;
    o.detail += format("%sB = %d: slope %.3f", o.detail.empty() ? "" : ", ", ambient, slope);
  }
  return o;
}

ExperimentSpec three_cell_spec(std::vector<Scheme> schemes, std::vector<double> snr, BitRule rule) {
  ExperimentSpec spec;
  spec.config = kThreeCell;
  spec.schemes = std::move(schemes);
  spec.snr_grid_db = std::move(snr);
  spec.rule = rule;
  spec.trials = 500;
  spec.seed = 20260;
  return spec;
}

double two_point_slope(const SchemeResult& r) {
  const auto& a = r.samples.front();
  const auto& b = r.samples.back();
  return (b.r_lim - a.r_lim) / (std::log2(snr_linear(b.snr_db)) - std::log2(snr_linear(a.snr_db)));
}

Outcome fixed_budget_ordering() {
  const ExperimentSpec spec = three_cell_spec(
      {Scheme::kProposed, Scheme::kBaseline1, Scheme::kBaseline2, Scheme::kBaseline3}, {30.0, 40.0},
      BitRule::fixed(800));
  const auto results = run_experiment(spec);
  const ThroughputSample& p = results[0].samples[0];
  Outcome o{true, ""};
  for (int b = 1; b <= 2; ++b) {
    const ThroughputSample& s = results[static_cast<std::size_t>(b)].samples[0];
    const double margin = p.r_lim - s.r_lim;
    const double se = std::hypot(p.stderr_lim, s.stderr_lim);
    o.pass = o.pass && margin > 2.0 * se;
    o.detail += format("vs baseline %d: +%.2f (%.1f SE); ", b, margin, margin / se);
  }
  o.detail += format("R_lim(30 dB) proposed %.2f; 30-40 dB slopes", p.r_lim);
  const double limit = 0.2 * kThreeCell.num_ms() * kThreeCell.d;
  for (const auto& r : results) {
    const double slope = two_point_slope(r);
    o.pass = o.pass && slope < limit;
    o.detail += format(" %s %.2f", std::string(scheme_name(r.scheme)).c_str(), slope);
  }
  o.detail += format(" (limit %.1f)", limit);
  return o;
}

Outcome scaled_budget_slope() {
  const std::int64_t d_proposed = feedback_dimension(greedy_profile(kThreeCell).profile, kThreeCell);
  const ExperimentSpec spec = three_cell_spec({Scheme::kProposed, Scheme::kBaseline1},
                                              {30.0, 35.0, 40.0, 45.0, 50.0}, BitRule::scaled(d_proposed));
  const auto results = run_experiment(spec);
  const double gkd = kThreeCell.num_ms() * kThreeCell.d;
  const Estimate prop = slope_with_error(results[0].samples);
  const Estimate base = slope_with_error(results[1].samples);
  const double prop_ls = dof_slope(results[0].samples);
  const double gap = prop.value - base.value;
  const double se = std::hypot(prop.std_error, base.std_error);
  Outcome o;
  o.pass = std::abs(prop_ls - gkd) <= 0.1 * gkd && gap > 2.0 * se;
  o.detail = format("B_tot = %lld log2 P; slope proposed %.3f (SE %.3f), baseline 1 %.3f (SE %.3f), gap %.1f SE",
                    static_cast<long long>(d_proposed), prop_ls, prop.std_error, base.value, base.std_error,
                    gap / se);
  return o;
}

Outcome asymptotics() {
  const int G = 200;
  const NetworkConfig cfg{G, 1, (3 * G) / 4, (3 * G) / 4, 1};
  const GreedyResult r = greedy_profile(cfg);
  const double measured =
      static_cast<double>(feedback_dimension(r.profile, cfg)) / std::pow(static_cast<double>(G), 4);
  const double limit = asymptotic_ratio(0.75, 0.75, 1);
  const double rel = std::abs(measured - limit) / limit;
  int below_one = 0;
  int points = 0;
  for (double c1 : {0.55, 0.65, 0.75, 0.85, 0.95}) {
    for (double c2 : {0.6, 0.7, 0.8, 0.9}) {
      ++points;
      below_one += full_cdi_ratio(c1, c2, 1) < 1.0;
    }
  }
  Outcome o;
  o.pass = rel < 0.05 && below_one == points;
  o.detail = format("D/G^4 = %.6f vs limit %.6f (%.1f%% off, g = %d); full-CDI ratio < 1 at %d/%d points", measured,
                    limit, 100.0 * rel, r.profile.g, below_one, points);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "feedback-dimension exactness", 1, feedback_dimensions},
      {2, "greedy-profile reproduction", 1, greedy_reproduction},
      {3, "feasibility oracle equivalence", 300, oracle_equivalence},
      {4, "greedy profiles are sufficient", 120, greedy_sufficiency},
      {5, "AILM convergence", 300, ailm_convergence},
      {6, "quantization scaling", 300, quantization_scaling},
      {7, "fixed-budget ordering and saturation", 1800, fixed_budget_ordering},
      {8, "scaled-budget DoF slope", 1800, scaled_budget_slope},
      {9, "asymptotics", 10, asymptotics},
  };
  std::set<int> selected;
  for (int a = 1; a < argc; ++a) {
    selected.insert(std::atoi(argv[a]));
  }
  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_s;
    const bool pass = o.pass && in_budget;
    failures += !pass;
    std::printf("%s criterion %d (%s): %s [%.1f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, in_budget ? "" : format(", over the %.0f s budget", c.budget_s).c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
