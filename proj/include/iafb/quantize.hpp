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
#include <vector>

#include "iafb/cmatrix.hpp"
#include "iafb/feedback.hpp"
#include "iafb/kernels.hpp"
#include "iafb/network.hpp"

namespace iafb {

class Rng;

inline constexpr int kMaxCodebookBits = 24;

/// 2^bits unit vectors in C^dim, stored planar and dimension-major for the
/// codeword search kernel.
class Codebook {
 public:
  Codebook(int dim, int bits, std::vector<double> re, std::vector<double> im);

  int dim() const { return dim_; }
  int bits() const { return bits_; }
  std::size_t size() const { return std::size_t{1} << bits_; }
  kernels::PlanarCodebookView view() const;
  std::vector<cd> entry(std::size_t c) const;

 private:
  int dim_;
  int bits_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// i.i.d. uniform unit vectors (normalised CN(0, I) draws, codeword-major
/// draw order). Throws for bits outside 0..kMaxCodebookBits or dim < 1.
Codebook build_codebook(int dim, int bits, Rng& rng);

struct QuantizedCsi {
  std::uint64_t index = 0;  // codeword id; 0 for sampled quantization
  CMatrix reconstructed;    // unit Frobenius norm, phase aligned to h
  double distortion = 0.0;  // 1 - |<codeword, h/||h||>|^2
};

/// Nearest codeword in chordal distance; ties go to the lowest index.
QuantizedCsi quantize_matrix(const CMatrix& h, const Codebook& cb);

/// Draws the output of an explicit random codebook of 2^bits entries
/// without building it. The best squared alignment of 2^bits uniform unit
/// vectors with a fixed direction in C^B has the law of 1 - z with
/// P(z <= t) = 1 - (1 - t^(B-1))^(2^bits), and the best codeword's component
/// orthogonal to h is uniform on that complement. bits may be fractional.
QuantizedCsi quantize_sampled(const CMatrix& h, double bits, Rng& rng);

/// (B - 1) 2^(-b). Requires B >= 2 and b >= 0.
double expected_distortion(int ambient, double b);

struct QuantizeOptions {
  /// Matrices receiving more bits than this use quantize_sampled.
  int max_explicit_bits = 16;
};

struct QuantizedFeedback {
  EffectiveCsiSet eff;       // effective matrices replaced by quantized ones
  int b = 0;                 // bits per Grassmannian dimension
  std::int64_t dimension = 0;  // D(L)
  double mean_distortion = 0.0;
};

/// b = floor(b_tot / D) bits per dimension; the matrix of ambient dimension
/// B gets b (B - 1) bits and its own stream derive_seed(seed, "codebook", q G + i).
QuantizedFeedback quantize_feedback(const EffectiveCsiSet& eff, const FeedbackProfile& profile,
                                    const NetworkConfig& cfg, std::int64_t b_tot, std::uint64_t seed,
                                    const QuantizeOptions& opts = {});

}  // namespace iafb
