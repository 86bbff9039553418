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

// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPUID
// check, so nothing here may run at static-initialisation time.

#include <immintrin.h>

#include <cmath>

#include "iafb/kernels.hpp"

namespace iafb::kernels::avx2 {

namespace {

const double* as_doubles(std::span<const std::complex<double>> x) {
  return reinterpret_cast<const double*>(x.data());
}

}  // namespace

CodewordMatch best_codeword(const PlanarCodebookView& book,
                            std::span<const std::complex<double>> query) {
  const std::size_t blocked = book.count & ~std::size_t{3};
  __m256d best_gain = _mm256_set1_pd(-1.0);
  __m256d best_idx = _mm256_setzero_pd();
  __m256d cur_idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d step = _mm256_set1_pd(4.0);

  for (std::size_t c = 0; c < blocked; c += 4) {
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t b = 0; b < book.dim; ++b) {
      const __m256d wr = _mm256_loadu_pd(book.re + b * book.stride + c);
      const __m256d wi = _mm256_loadu_pd(book.im + b * book.stride + c);
      const __m256d qr = _mm256_set1_pd(query[b].real());
      const __m256d qi = _mm256_set1_pd(query[b].imag());
      re = _mm256_fmadd_pd(wr, qr, re);
      re = _mm256_fmadd_pd(wi, qi, re);
      im = _mm256_fmadd_pd(wr, qi, im);
      im = _mm256_fnmadd_pd(wi, qr, im);
    }
    __m256d gain = _mm256_mul_pd(re, re);
    gain = _mm256_fmadd_pd(im, im, gain);
    const __m256d better = _mm256_cmp_pd(gain, best_gain, _CMP_GT_OQ);
    best_gain = _mm256_blendv_pd(best_gain, gain, better);
    best_idx = _mm256_blendv_pd(best_idx, cur_idx, better);
    cur_idx = _mm256_add_pd(cur_idx, step);
  }

  alignas(32) double gains[4];
  alignas(32) double idx[4];
  _mm256_store_pd(gains, best_gain);
  _mm256_store_pd(idx, best_idx);
  CodewordMatch best{0, -1.0};
  for (int l = 0; l < 4; ++l) {
    const auto index = static_cast<std::size_t>(idx[l]);
    if (gains[l] > best.gain || (gains[l] == best.gain && index < best.index)) {
      best = {index, gains[l]};
    }
  }

  for (std::size_t c = blocked; c < book.count; ++c) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t b = 0; b < book.dim; ++b) {
      const double wr = book.re[b * book.stride + c];
      const double wi = book.im[b * book.stride + c];
      re = std::fma(wr, query[b].real(), re);
      re = std::fma(wi, query[b].imag(), re);
      im = std::fma(wr, query[b].imag(), im);
      im = std::fma(-wi, query[b].real(), im);
    }
    double gain = re * re;
    gain = std::fma(im, im, gain);
    if (gain > best.gain) {
      best = {c, gain};
    }
  }
  return best;
}

double sum_abs2(std::span<const std::complex<double>> x) {
  const double* p = as_doubles(x);
  const std::size_t n = 2 * x.size();
  const std::size_t blocked = n & ~std::size_t{3};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (std::size_t i = blocked; i < n; ++i) {
    lanes[i & 3] = std::fma(p[i], p[i], lanes[i & 3]);
  }
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

std::complex<double> dotc(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  const std::size_t n = 2 * a.size();
  const std::size_t blocked = n & ~std::size_t{3};
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d va = _mm256_loadu_pd(pa + i);
    const __m256d vb = _mm256_loadu_pd(pb + i);
    const __m256d vb_swapped = _mm256_permute_pd(vb, 0b0101);
    re = _mm256_fmadd_pd(va, vb, re);
    im = _mm256_fmadd_pd(va, vb_swapped, im);
  }
  alignas(32) double re_lanes[4];
  alignas(32) double im_lanes[4];
  _mm256_store_pd(re_lanes, re);
  _mm256_store_pd(im_lanes, im);
  for (std::size_t i = blocked; i < n; ++i) {
    re_lanes[i & 3] = std::fma(pa[i], pb[i], re_lanes[i & 3]);
    im_lanes[i & 3] = std::fma(pa[i], pb[i ^ 1], im_lanes[i & 3]);
  }
  return {(re_lanes[0] + re_lanes[1]) + (re_lanes[2] + re_lanes[3]),
          (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3])};
}

}  // namespace iafb::kernels::avx2
