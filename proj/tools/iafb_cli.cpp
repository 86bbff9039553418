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

// iafb command-line front end.
//
//   iafb feasible --config net.json --profile profile.json
//   iafb optimize --config net.json [--out profile.json]
//   iafb design   --config net.json [--profile p.json] [--seed S] [--out trace.csv]
//   iafb simulate experiment.json [--seed S] [--trials T] [--out results.csv]
//   iafb sweep    --config net.json --snr 0,10,20 --btot 800|scaled|unquantized
//
// Exit codes: 0 success (feasible: sufficient conditions hold), 2 necessary
// conditions only, 3 infeasible, 4 DoF unachievable, 64 unparseable input,
// 1 any other failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iafb/experiment.hpp"
#include "iafb/feasibility.hpp"
#include "iafb/io.hpp"
#include "iafb/profile_opt.hpp"
#include "iafb/rng.hpp"
#include "iafb/transceiver.hpp"

namespace {

using namespace iafb;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNecessaryOnly = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnachievable = 4;
constexpr int kExitUsage = 64;

struct Options {
  std::string config;
  std::string profile;
  std::string experiment;
  std::string out;
  std::string snr;
  std::string btot;
  std::vector<std::string> schemes;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << text;
}

std::vector<double> parse_snr_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad SNR value '" + item + "'");
    }
  }
  if (out.empty()) {
    throw ParseError("--snr needs at least one value");
  }
  return out;
}

BitRule parse_bit_rule(const std::string& text) {
  if (text.empty() || text == "unquantized") {
    return BitRule::unquantized();
  }
  if (text == "scaled") {
    return BitRule::scaled();
  }
  try {
    std::size_t used = 0;
    const long long bits = std::stoll(text, &used);
    if (used != text.size() || bits < 0) {
      throw std::invalid_argument(text);
    }
    return BitRule::fixed(bits);
  } catch (const std::logic_error&) {
    throw ParseError("--btot must be a non-negative integer, 'scaled' or 'unquantized'");
  }
}

void print_witness(const FlowWitness& w) {
  std::printf("%-8s %-4s %6s %6s\n", "MS", "BS", "f_r", "f_t");
  for (const auto& e : w) {
    std::printf("(%d,%d)%*s %-4d %6lld %6lld\n", e.j + 1, e.k + 1, 3, "", e.i + 1, static_cast<long long>(e.f_r),
                static_cast<long long>(e.f_t));
  }
}

int cmd_feasible(const Options& o) {
  const ConfigFile cf = parse_config(read_file(o.config));
  const FeedbackProfile profile = parse_profile(read_file(o.profile), cf.config);
  const FeasibilityVerdict v = check_sufficient(profile, cf.config);
  std::printf("necessary: %s\n", v.necessary_ok ? "yes" : "no");
  std::printf("sufficient: %s\n", v.sufficient_ok ? "yes" : "no");
  if (v.violated_condition) {
    std::printf("violated: %s\n", v.violated_condition->c_str());
  }
  try {
    std::printf("feedback dimension D = %lld\n", static_cast<long long>(feedback_dimension(profile, cf.config)));
  } catch (const std::invalid_argument&) {
    std::printf("feedback dimension D undefined (some A_jk < 1)\n");
  }
  if (v.witness && !v.witness->empty()) {
    print_witness(*v.witness);
  }
  if (v.sufficient_ok) {
    return kExitOk;
  }
  return v.necessary_ok ? kExitNecessaryOnly : kExitInfeasible;
}

int cmd_optimize(const Options& o) {
  const ConfigFile cf = parse_config(read_file(o.config));
  const NetworkConfig& cfg = cf.config;
  GreedyResult r;
  try {
    r = greedy_profile(cfg);
  } catch (const UnachievableError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitUnachievable;
  }
  std::printf("g0 = %d\ng1 = %d\nN0 = %d\n", r.g0, g_one(cfg), r.n0);
  if (r.profile.g != r.g0) {
    std::printf("g = %d (raised from g0 to meet the necessary conditions)\n", r.profile.g);
  }
  std::printf("D(L0) = %lld\nD_low = %lld\n", static_cast<long long>(feedback_dimension(r.profile, cfg)),
              static_cast<long long>(d_lower_bound(cfg)));
  std::printf("n =");
  for (int n : r.profile.n) {
    std::printf(" %d", n);
  }
  std::printf("\n");
  print_witness(r.witness);
  if (!o.out.empty()) {
    emit(o.out, profile_to_json(r.profile, cfg));
  } else {
    std::cout << profile_to_json(r.profile, cfg);
  }
  return kExitOk;
}

int cmd_design(const Options& o) {
  const ConfigFile cf = parse_config(read_file(o.config));
  const NetworkConfig& cfg = cf.config;
  const std::uint64_t seed = o.seed.value_or(cf.seed);
  const FeedbackProfile profile =
      o.profile.empty() ? greedy_profile(cfg).profile : parse_profile(read_file(o.profile), cfg);
  const FeasibilityVerdict v = check_necessary_flow(profile, cfg);
  if (!v.necessary_ok) {
    std::fprintf(stderr, "infeasible profile: %s\n", v.violated_condition.value_or("").c_str());
    return kExitInfeasible;
  }
  Rng channel_rng(derive_seed(seed, "channels"));
  const ChannelSet channels = draw_channels(cfg, channel_rng);
  Rng t2_rng(derive_seed(seed, "outer-precoders"));
  const OuterPrecoderSetII t2 = fixed_outer_precoders(cfg, profile, t2_rng);
  const EffectiveCsiSet eff = apply_filter(channels, profile, t2, cfg);
  AilmOptions opts;
  opts.seed = derive_seed(seed, "ailm");
  const ReducedSolution sol = ailm_solve(eff, profile, cfg, opts);
  std::printf("iterations = %zu\nrestarts = %d\nfinal leakage = %.6g\nconverged = %s\n",
              sol.leakage_trace.size() - 1, sol.restarts, sol.final_leakage(), sol.converged ? "yes" : "no");
  if (sol.converged) {
    const TransceiverSet ts = reconstruct(sol, eff, t2, profile, cfg, {opts.tol_leakage});
    const IaReport rep = verify_ia(channels, ts, cfg, 1e-4);
    std::printf("min signal singular value = %.6g\nworst intracell = %.6g\nworst intercell = %.6g\n",
                rep.min_signal_sv, rep.worst_intracell, rep.worst_intercell);
  }
  if (!o.out.empty()) {
    std::ostringstream csv;
    write_trace_csv(csv, sol.leakage_trace);
    emit(o.out, csv.str());
  }
  return sol.converged ? kExitOk : kExitFailure;
}

int run_and_write(const ExperimentSpec& spec) {
  for (Scheme s : spec.schemes) {
    if (const auto p = scheme_profile(s, spec.config, spec.profile)) {
      const FeasibilityVerdict v = check_necessary_flow(*p, spec.config);
      if (!v.necessary_ok) {
        std::fprintf(stderr, "%s: infeasible profile: %s\n", std::string(scheme_name(s)).c_str(),
                     v.violated_condition.value_or("").c_str());
        return kExitInfeasible;
      }
    }
  }
  std::ostringstream csv;
  write_results_csv(csv, run_experiment(spec));
  emit(spec.output, csv.str());
  return kExitOk;
}

int cmd_simulate(const Options& o) {
  ExperimentSpec spec = parse_experiment(read_file(o.experiment));
  if (o.seed) spec.seed = *o.seed;
  if (o.trials) spec.trials = *o.trials;
  if (!o.out.empty()) spec.output = o.out;
  return run_and_write(spec);
}

int cmd_sweep(const Options& o) {
  const ConfigFile cf = parse_config(read_file(o.config));
  ExperimentSpec spec;
  spec.config = cf.config;
  spec.seed = o.seed.value_or(cf.seed);
  spec.snr_grid_db = parse_snr_list(o.snr);
  spec.rule = parse_bit_rule(o.btot);
  spec.trials = o.trials.value_or(500);
  spec.output = o.out;
  spec.schemes.clear();
  try {
    for (const auto& name : o.schemes) {
      spec.schemes.push_back(parse_scheme(name));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (spec.schemes.empty()) {
    spec.schemes = {Scheme::kProposed, Scheme::kBaseline1, Scheme::kBaseline2, Scheme::kBaseline3};
  }
  if (!o.profile.empty()) {
    spec.profile = parse_profile(read_file(o.profile), spec.config);
  }
  if (spec.rule.kind == BitRule::Kind::kScaled) {
    // Every scheme gets the proposed scheme's budget D log2 P.
    const auto p = scheme_profile(Scheme::kProposed, spec.config, spec.profile);
    spec.rule.scale_dimension = feedback_dimension(*p, spec.config);
  }
  try {
    validate_experiment(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return run_and_write(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interference alignment with partial CSI feedback"};
  app.require_subcommand(1);
  Options o;

  auto* feasible = app.add_subcommand("feasible", "Check IA feasibility of a feedback profile");
  feasible->add_option("--config", o.config, "Network config JSON")->required();
  feasible->add_option("--profile", o.profile, "Feedback profile JSON")->required();

  auto* optimize = app.add_subcommand("optimize", "Greedy feedback profile and dimension bounds");
  optimize->add_option("--config", o.config, "Network config JSON")->required();
  optimize->add_option("--out", o.out, "Write the profile JSON here");

  auto* design = app.add_subcommand("design", "One-shot transceiver solve on a random channel");
  design->add_option("--config", o.config, "Network config JSON")->required();
  design->add_option("--profile", o.profile, "Feedback profile JSON (greedy when omitted)");
  design->add_option("--seed", o.seed, "Override the config seed");
  design->add_option("--out", o.out, "Leakage trace CSV");

  auto* simulate = app.add_subcommand("simulate", "Run an experiment file");
  simulate->add_option("experiment", o.experiment, "Experiment JSON")->required();
  simulate->add_option("--seed", o.seed, "Override the experiment seed");
  simulate->add_option("--trials", o.trials, "Override the trial count");
  simulate->add_option("--out", o.out, "Results CSV (stdout when omitted)");

  auto* sweep = app.add_subcommand("sweep", "Throughput sweep over an SNR grid");
  sweep->add_option("--config", o.config, "Network config JSON")->required();
  sweep->add_option("--profile", o.profile, "Proposed profile JSON (greedy when omitted)");
  sweep->add_option("--snr", o.snr, "Comma-separated SNR grid in dB")->required();
  sweep->add_option("--btot", o.btot, "Total feedback bits, 'scaled' or 'unquantized'");
  sweep->add_option("--schemes", o.schemes, "Subset of proposed baseline1 baseline2 baseline3");
  sweep->add_option("--seed", o.seed, "Override the config seed");
  sweep->add_option("--trials", o.trials, "Trials per SNR point (default 500)");
  sweep->add_option("--out", o.out, "Results CSV (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*feasible) return cmd_feasible(o);
    if (*optimize) return cmd_optimize(o);
    if (*design) return cmd_design(o);
    if (*simulate) return cmd_simulate(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
