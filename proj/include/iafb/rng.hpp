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

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace iafb {

/// Seedable random stream.
///
/// State layout: one std::mt19937_64 engine (bit-exact across standard
/// libraries) seeded with the 64-bit seed, plus one cached Gaussian.
/// Uniform doubles take the top 53 bits of one engine output; Gaussians use
/// the polar-free Box-Muller transform on two uniforms and return the cosine
/// branch first, then the sine branch. No std::*_distribution is used, so
/// streams are identical on every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();
  /// Standard normal N(0, 1).
  double normal();
  /// Circularly-symmetric CN(0, 1): real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
/// 64-bit FNV-1a.
std::uint64_t hash_label(std::string_view label);

/// Child seed for a named component: splitmix64(splitmix64(parent ^ hash(label)) ^ index).
/// Trial t of an experiment uses derive_seed(seed, "trial", t).
std::uint64_t derive_seed(std::uint64_t parent, std::string_view label, std::uint64_t index = 0);

}  // namespace iafb
