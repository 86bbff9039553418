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
#include <stdexcept>
#include <string>

#include "iafb/experiment.hpp"
#include "iafb/feedback.hpp"
#include "iafb/network.hpp"

namespace iafb {

/// Malformed or semantically invalid input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"G": 3, "K": 2, "N": 4, "M": 4, "d": 1, "seed": 7}; seed is optional.
struct ConfigFile {
  NetworkConfig config;
  std::uint64_t seed = 1;
};

/// {"m": [[4, 4], [4, 4], [4, 4]], "g": 2, "n": [4, 3]}: m is a G x K grid.
/// Serialized BS and MS positions are 1-based by order (row j is BS j + 1).
ConfigFile parse_config(const std::string& json_text);
FeedbackProfile parse_profile(const std::string& json_text, const NetworkConfig& cfg);

/// Keys: config (object as above), scheme or schemes, profile (optional),
/// snr_db (list), b_tot (integer, "scaled" or "unquantized"),
/// scale_dimension (optional), trials, seed, output.
ExperimentSpec parse_experiment(const std::string& json_text);

std::string config_to_json(const NetworkConfig& cfg, std::uint64_t seed);
std::string profile_to_json(const FeedbackProfile& profile, const NetworkConfig& cfg);

/// Whole file as a string. Throws ParseError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace iafb
