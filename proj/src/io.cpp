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

#include "iafb/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace iafb {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T get(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

ConfigFile config_from(const json& j) {
  if (!j.is_object()) {
    throw ParseError("config must be a JSON object");
  }
  ConfigFile out;
  out.config = {get<int>(j, "G"), get<int>(j, "K"), get<int>(j, "N"), get<int>(j, "M"), get<int>(j, "d")};
  if (j.contains("seed")) {
    out.seed = get<std::uint64_t>(j, "seed");
  }
  try {
    validate_config(out.config);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

FeedbackProfile profile_from(const json& j, const NetworkConfig& cfg) {
  if (!j.is_object()) {
    throw ParseError("profile must be a JSON object");
  }
  FeedbackProfile p;
  const auto grid = get<std::vector<std::vector<int>>>(j, "m");
  if (grid.size() != static_cast<std::size_t>(cfg.G)) {
    throw ParseError("profile: m must have G = " + std::to_string(cfg.G) + " rows");
  }
  for (const auto& row : grid) {
    if (row.size() != static_cast<std::size_t>(cfg.K)) {
      throw ParseError("profile: every m row must have K = " + std::to_string(cfg.K) + " entries");
    }
    p.m.insert(p.m.end(), row.begin(), row.end());
  }
  p.g = get<int>(j, "g");
  p.n = get<std::vector<int>>(j, "n");
  try {
    validate_profile(p, cfg);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return p;
}

}  // namespace

ConfigFile parse_config(const std::string& json_text) { return config_from(parse_json(json_text)); }

FeedbackProfile parse_profile(const std::string& json_text, const NetworkConfig& cfg) {
  return profile_from(parse_json(json_text), cfg);
}

ExperimentSpec parse_experiment(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) {
    throw ParseError("experiment must be a JSON object");
  }
  ExperimentSpec spec;
  if (!j.contains("config")) {
    throw ParseError("missing key 'config'");
  }
  const ConfigFile cf = config_from(j.at("config"));
  spec.config = cf.config;
  spec.seed = j.contains("seed") ? get<std::uint64_t>(j, "seed") : cf.seed;
  try {
    if (j.contains("schemes")) {
      spec.schemes.clear();
      for (const auto& name : get<std::vector<std::string>>(j, "schemes")) {
        spec.schemes.push_back(parse_scheme(name));
      }
    } else if (j.contains("scheme")) {
      spec.schemes = {parse_scheme(get<std::string>(j, "scheme"))};
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (j.contains("profile")) {
    spec.profile = profile_from(j.at("profile"), spec.config);
  }
  spec.snr_grid_db = get<std::vector<double>>(j, "snr_db");
  const json& bits = j.contains("b_tot") ? j.at("b_tot") : json("unquantized");
  if (bits.is_number_integer()) {
    spec.rule = BitRule::fixed(bits.get<std::int64_t>());
  } else if (bits == "scaled") {
    std::optional<std::int64_t> dim;
    if (j.contains("scale_dimension")) {
      dim = get<std::int64_t>(j, "scale_dimension");
    }
    spec.rule = BitRule::scaled(dim);
  } else if (bits == "unquantized") {
    spec.rule = BitRule::unquantized();
  } else {
    throw ParseError("b_tot must be an integer, \"scaled\" or \"unquantized\"");
  }
  if (j.contains("trials")) {
    spec.trials = get<int>(j, "trials");
  }
  if (j.contains("output")) {
    spec.output = get<std::string>(j, "output");
  }
  try {
    validate_experiment(spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

std::string config_to_json(const NetworkConfig& cfg, std::uint64_t seed) {
  const json j = {{"G", cfg.G}, {"K", cfg.K}, {"N", cfg.N}, {"M", cfg.M}, {"d", cfg.d}, {"seed", seed}};
  return j.dump() + "\n";
}

std::string profile_to_json(const FeedbackProfile& profile, const NetworkConfig& cfg) {
  json grid = json::array();
  for (int jj = 0; jj < cfg.G; ++jj) {
    json row = json::array();
    for (int k = 0; k < cfg.K; ++k) {
      row.push_back(profile.m_at(cfg, jj, k));
    }
    grid.push_back(row);
  }
  const json j = {{"m", grid}, {"g", profile.g}, {"n", profile.n}};
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace iafb
