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

#include "iafb/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "iafb/rng.hpp"

namespace iafb {

namespace {

QuantizedCsi align_to(const std::vector<cd>& codeword, const std::vector<cd>& direction, std::size_t rows,
                      std::size_t cols, std::uint64_t index) {
  const cd overlap = inner(codeword, direction);
  const double mag = std::abs(overlap);
  const cd phase = mag > 0.0 ? overlap / mag : cd(1.0, 0.0);
  std::vector<cd> aligned(codeword.size());
  for (std::size_t t = 0; t < codeword.size(); ++t) {
    aligned[t] = codeword[t] * phase;
  }
  QuantizedCsi out;
  out.index = index;
  out.reconstructed = unvec(aligned, rows, cols);
  out.distortion = std::max(0.0, 1.0 - mag * mag);
  return out;
}

}  // namespace

Codebook::Codebook(int dim, int bits, std::vector<double> re, std::vector<double> im)
    : dim_(dim), bits_(bits), re_(std::move(re)), im_(std::move(im)) {
  if (re_.size() != size() * static_cast<std::size_t>(dim_) || im_.size() != re_.size()) {
    throw std::invalid_argument("Codebook: storage does not match dim * 2^bits");
  }
}

kernels::PlanarCodebookView Codebook::view() const {
  return {re_.data(), im_.data(), size(), size(), static_cast<std::size_t>(dim_)};
}

std::vector<cd> Codebook::entry(std::size_t c) const {
  std::vector<cd> out(static_cast<std::size_t>(dim_));
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b] = {re_[b * size() + c], im_[b * size() + c]};
  }
  return out;
}

Codebook build_codebook(int dim, int bits, Rng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("build_codebook: dimension " + std::to_string(dim) + " < 1");
  }
  if (bits < 0 || bits > kMaxCodebookBits) {
    throw std::invalid_argument("build_codebook: bits = " + std::to_string(bits) + " outside 0.." +
                                std::to_string(kMaxCodebookBits));
  }
  const std::size_t count = std::size_t{1} << bits;
  const auto b_dim = static_cast<std::size_t>(dim);
  std::vector<double> re(count * b_dim);
  std::vector<double> im(count * b_dim);
  std::vector<cd> w(b_dim);
  for (std::size_t c = 0; c < count; ++c) {
    double norm2 = 0.0;
    for (auto& z : w) {
      z = rng.complex_normal();
      norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t b = 0; b < b_dim; ++b) {
      re[b * count + c] = w[b].real() * inv;
      im[b * count + c] = w[b].imag() * inv;
    }
  }
  return Codebook(dim, bits, std::move(re), std::move(im));
}

QuantizedCsi quantize_matrix(const CMatrix& h, const Codebook& cb) {
  if (h.size() != static_cast<std::size_t>(cb.dim())) {
    throw std::invalid_argument("quantize_matrix: matrix has " + std::to_string(h.size()) +
                                " entries, codebook dimension is " + std::to_string(cb.dim()));
  }
  const NormalizedVector nv = vec_normalize(h);
  const kernels::CodewordMatch match = kernels::best_codeword(cb.view(), nv.direction);
  return align_to(cb.entry(match.index), nv.direction, h.rows(), h.cols(), match.index);
}

QuantizedCsi quantize_sampled(const CMatrix& h, double bits, Rng& rng) {
  if (!(bits >= 0.0)) {
    throw std::invalid_argument("quantize_sampled: negative bit budget");
  }
  const NormalizedVector nv = vec_normalize(h);
  const std::size_t dim = nv.direction.size();
  if (dim == 1) {
    return align_to(nv.direction, nv.direction, h.rows(), h.cols(), 0);
  }
  const double u = rng.uniform();
  const double tail = -std::expm1(std::log1p(-u) * std::exp2(-bits));
  const double z = std::pow(tail, 1.0 / static_cast<double>(dim - 1));

  // Uniform direction orthogonal to h.
  std::vector<cd> w(dim);
  double norm2 = 0.0;
  do {
    for (auto& x : w) {
      x = rng.complex_normal();
    }
    const cd along = inner(nv.direction, w);
    norm2 = 0.0;
    for (std::size_t t = 0; t < dim; ++t) {
      w[t] -= along * nv.direction[t];
      norm2 += std::norm(w[t]);
    }
  } while (!(norm2 > 0.0));
  const double scale = std::sqrt(z / norm2);
  const double keep = std::sqrt(1.0 - z);
  std::vector<cd> codeword(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    codeword[t] = keep * nv.direction[t] + scale * w[t];
  }
  return align_to(codeword, nv.direction, h.rows(), h.cols(), 0);
}

double expected_distortion(int ambient, double b) {
  if (ambient < 2 || !(b >= 0.0)) {
    throw std::invalid_argument("expected_distortion: need B >= 2 and b >= 0");
  }
  return (ambient - 1) * std::exp2(-b);
}

QuantizedFeedback quantize_feedback(const EffectiveCsiSet& eff, const FeedbackProfile& profile,
                                    const NetworkConfig& cfg, std::int64_t b_tot, std::uint64_t seed,
                                    const QuantizeOptions& opts) {
  QuantizedFeedback out;
  out.dimension = feedback_dimension(profile, cfg);
  if (out.dimension <= 0) {
    throw std::invalid_argument("quantize_feedback: feedback dimension is zero");
  }
  if (b_tot < 0) {
    throw std::invalid_argument("quantize_feedback: negative bit budget");
  }
  out.b = static_cast<int>(b_tot / out.dimension);
  out.eff = eff;
  double total = 0.0;
  int count = 0;
  for (int j = 0; j < cfg.G; ++j) {
    for (int k = 0; k < cfg.K; ++k) {
      const int q = cfg.ms(j, k);
      for (const auto& entry : grassmann_tuple(profile, cfg, j, k)) {
        const CMatrix& h = eff.effective(q, entry.source);
        Rng rng(derive_seed(seed, "codebook", static_cast<std::uint64_t>(q) * cfg.G + entry.source));
        const double bits = static_cast<double>(out.b) * (entry.ambient - 1);
        QuantizedCsi qc = bits <= opts.max_explicit_bits
                              ? quantize_matrix(h, build_codebook(entry.ambient, static_cast<int>(bits), rng))
                              : quantize_sampled(h, bits, rng);
        total += qc.distortion;
        ++count;
        out.eff.effective(q, entry.source) = std::move(qc.reconstructed);
      }
    }
  }
  out.mean_distortion = count > 0 ? total / count : 0.0;
  return out;
}

}  // namespace iafb
