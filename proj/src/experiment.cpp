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

#include "iafb/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "iafb/feasibility.hpp"
#include "iafb/profile_opt.hpp"
#include "iafb/quantize.hpp"
#include "iafb/rng.hpp"
#include "iafb/transceiver.hpp"

namespace iafb {

namespace {

constexpr std::int64_t kNoQuantization = -1;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double trace_real(const CMatrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    t += a(i, i).real();
  }
  return t;
}

struct Accumulator {
  std::vector<double> r_per;
  std::vector<double> r_lim;
  std::vector<double> r_lb;
  std::vector<double> leak;
};

// Unconverged solves are still evaluated; their leftover leakage shows up in
// the residual interference instead of aborting the sweep.
const ReconstructOptions kLenient{std::numeric_limits<double>::infinity()};

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kProposed:
      return "proposed";
    case Scheme::kBaseline1:
      return "baseline1";
    case Scheme::kBaseline2:
      return "baseline2";
    case Scheme::kBaseline3:
      return "baseline3";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kProposed, Scheme::kBaseline1, Scheme::kBaseline2, Scheme::kBaseline3}) {
    if (scheme_name(s) == name) {
      return s;
    }
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (expected proposed, baseline1, baseline2 or baseline3)");
}

void validate_experiment(const ExperimentSpec& spec) {
  validate_config(spec.config);
  if (spec.snr_grid_db.empty()) {
    throw std::invalid_argument("experiment: empty SNR grid");
  }
  for (std::size_t s = 1; s < spec.snr_grid_db.size(); ++s) {
    if (!(spec.snr_grid_db[s] > spec.snr_grid_db[s - 1])) {
      throw std::invalid_argument("experiment: SNR grid must be strictly increasing");
    }
  }
  if (spec.trials < 1) {
    throw std::invalid_argument("experiment: trials must be at least 1");
  }
  if (spec.schemes.empty()) {
    throw std::invalid_argument("experiment: no schemes selected");
  }
  if (spec.rule.kind == BitRule::Kind::kFixed && spec.rule.fixed_bits < 0) {
    throw std::invalid_argument("experiment: negative B_tot");
  }
}

std::optional<FeedbackProfile> scheme_profile(Scheme scheme, const NetworkConfig& cfg,
                                              const std::optional<FeedbackProfile>& proposed) {
  switch (scheme) {
    case Scheme::kProposed:
      return proposed ? *proposed : greedy_profile(cfg).profile;
    case Scheme::kBaseline1:
      return full_cdi_profile(cfg);
    case Scheme::kBaseline2:
      return truncated_cdi_profile(cfg);
    case Scheme::kBaseline3:
      return std::nullopt;
  }
  return std::nullopt;
}

std::int64_t total_bits(const BitRule& rule, std::int64_t own_dimension, double snr_db) {
  switch (rule.kind) {
    case BitRule::Kind::kFixed:
      return rule.fixed_bits;
    case BitRule::Kind::kScaled: {
      const double dim = static_cast<double>(rule.scale_dimension.value_or(own_dimension));
      return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(dim * std::log2(snr_linear(snr_db)))));
    }
    case BitRule::Kind::kUnquantized:
      return kNoQuantization;
  }
  return 0;
}

SchemeResult run_scheme(const ExperimentSpec& spec, Scheme scheme) {
  validate_experiment(spec);
  const NetworkConfig& cfg = spec.config;
  const auto profile = scheme_profile(scheme, cfg, spec.profile);

  SchemeResult result;
  result.scheme = scheme;
  OuterPrecoderSetII t2;
  if (profile) {
    const FeasibilityVerdict verdict = check_necessary_flow(*profile, cfg);
    if (!verdict.necessary_ok) {
      throw std::domain_error("scheme " + std::string(scheme_name(scheme)) + " has an infeasible profile: " +
                              verdict.violated_condition.value_or("unknown"));
    }
    result.feedback_dim = feedback_dimension(*profile, cfg);
    Rng rng(derive_seed(spec.seed, "outer-precoders"));
    t2 = fixed_outer_precoders(cfg, *profile, rng);
  }

  const std::size_t points = spec.snr_grid_db.size();
  std::vector<std::int64_t> b_tot(points);
  std::vector<double> power(points);
  for (std::size_t s = 0; s < points; ++s) {
    b_tot[s] = total_bits(spec.rule, result.feedback_dim, spec.snr_grid_db[s]);
    power[s] = snr_linear(spec.snr_grid_db[s]);
  }
  std::vector<Accumulator> acc(points);

  for (int t = 0; t < spec.trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(spec.seed, "trial", static_cast<std::uint64_t>(t));
    Rng channel_rng(derive_seed(trial_seed, "channels"));
    const ChannelSet channels = draw_channels(cfg, channel_rng);

    if (!profile) {
      Rng beam_rng(derive_seed(trial_seed, "random-beamforming"));
      const TransceiverSet ts = random_transceivers(cfg, beam_rng);
      for (std::size_t s = 0; s < points; ++s) {
        const auto phis = residual_interference(channels, ts, cfg, power[s]);
        const double r = throughput_limited(channels, ts, phis, cfg, power[s]);
        double leak = 0.0;
        for (const auto& phi : phis) {
          leak += trace_real(phi);
        }
        acc[s].r_per.push_back(r);
        acc[s].r_lim.push_back(r);
        acc[s].r_lb.push_back(r);
        acc[s].leak.push_back(leak);
      }
      continue;
    }

    const EffectiveCsiSet eff = apply_filter(channels, *profile, t2, cfg);
    AilmOptions opts;
    opts.seed = derive_seed(trial_seed, "ailm");
    const TransceiverSet ideal = reconstruct(ailm_solve(eff, *profile, cfg, opts), eff, t2, *profile, cfg, kLenient);

    std::map<int, TransceiverSet> designed;
    for (std::size_t s = 0; s < points; ++s) {
      double b = std::numeric_limits<double>::infinity();
      const TransceiverSet* ts = &ideal;
      if (b_tot[s] != kNoQuantization) {
        const int b_int = static_cast<int>(b_tot[s] / result.feedback_dim);
        b = b_int;
        auto it = designed.find(b_int);
        if (it == designed.end()) {
          const QuantizedFeedback qf = quantize_feedback(eff, *profile, cfg, b_tot[s],
                                                         derive_seed(trial_seed, "quantize", static_cast<std::uint64_t>(b_int)));
          AilmOptions qopts;
          qopts.seed = derive_seed(trial_seed, "ailm-quantized", static_cast<std::uint64_t>(b_int));
          it = designed
                   .emplace(b_int, reconstruct(ailm_solve(qf.eff, *profile, cfg, qopts), qf.eff, t2, *profile, cfg,
                                               kLenient))
                   .first;
        }
        ts = &it->second;
      }
      const double r_per = throughput_perfect(channels, ideal, cfg, power[s]);
      const auto phis = residual_interference(channels, *ts, cfg, power[s]);
      double leak = 0.0;
      for (const auto& phi : phis) {
        leak += trace_real(phi);
      }
      acc[s].r_per.push_back(r_per);
      acc[s].r_lim.push_back(throughput_limited(channels, *ts, phis, cfg, power[s]));
      acc[s].r_lb.push_back(throughput_lower_bound(r_per, *profile, cfg, power[s], b));
      acc[s].leak.push_back(leak);
    }
  }

  for (std::size_t s = 0; s < points; ++s) {
    ThroughputSample sample;
    sample.snr_db = spec.snr_grid_db[s];
    sample.b_tot = b_tot[s];
    sample.trials = spec.trials;
    sample.r_per = mean_with_error(acc[s].r_per).value;
    const Estimate lim = mean_with_error(acc[s].r_lim);
    sample.r_lim = lim.value;
    sample.stderr_lim = lim.std_error;
    sample.r_lb = mean_with_error(acc[s].r_lb).value;
    sample.leakage_mean = mean_with_error(acc[s].leak).value;
    sample.r_lim_trials = std::move(acc[s].r_lim);
    result.samples.push_back(std::move(sample));
  }
  return result;
}

std::vector<SchemeResult> run_experiment(const ExperimentSpec& spec) {
  validate_experiment(spec);
  std::vector<SchemeResult> out;
  for (Scheme s : spec.schemes) {
    out.push_back(run_scheme(spec, s));
  }
  return out;
}

ThroughputSample run_baseline(int id, const NetworkConfig& cfg, double snr_db, std::int64_t b_tot, int trials,
                              std::uint64_t seed) {
  if (id < 1 || id > 3) {
    throw std::invalid_argument("run_baseline: id must be 1, 2 or 3");
  }
  ExperimentSpec spec;
  spec.config = cfg;
  spec.snr_grid_db = {snr_db};
  spec.rule = BitRule::fixed(b_tot);
  spec.trials = trials;
  spec.seed = seed;
  const Scheme scheme = id == 1 ? Scheme::kBaseline1 : id == 2 ? Scheme::kBaseline2 : Scheme::kBaseline3;
  return run_scheme(spec, scheme).samples.front();
}

void write_results_csv(std::ostream& out, std::span<const SchemeResult> results) {
  out << "scheme,snr_db,b_tot,trials,r_per_mean,r_lim_mean,r_lb_mean,stderr,leakage_mean,feedback_dim\n";
  for (const auto& r : results) {
    for (const auto& s : r.samples) {
      out << scheme_name(r.scheme) << ',' << fmt(s.snr_db) << ','
          << (s.b_tot == kNoQuantization ? std::string("inf") : std::to_string(s.b_tot)) << ',' << s.trials << ','
          << fmt(s.r_per) << ',' << fmt(s.r_lim) << ',' << fmt(s.r_lb) << ',' << fmt(s.stderr_lim) << ','
          << fmt(s.leakage_mean) << ',' << r.feedback_dim << '\n';
    }
  }
}

void write_trace_csv(std::ostream& out, std::span<const double> trace) {
  out << "iter,I\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", trace[i]);
    out << i << ',' << buf << '\n';
  }
}

}  // namespace iafb
