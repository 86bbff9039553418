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

#include <cmath>

#include "iafb/kernels.hpp"

namespace iafb::kernels::scalar {

namespace {

const double* as_doubles(std::span<const std::complex<double>> x) {
  return reinterpret_cast<const double*>(x.data());
}

}  // namespace

// Lane l of the reference accumulates the doubles at positions i with
// i % 4 == l, matching one 256-bit register of four doubles.

CodewordMatch best_codeword(const PlanarCodebookView& book,
                            std::span<const std::complex<double>> query) {
  CodewordMatch best{0, -1.0};
  for (std::size_t c = 0; c < book.count; ++c) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t b = 0; b < book.dim; ++b) {
      const double wr = book.re[b * book.stride + c];
      const double wi = book.im[b * book.stride + c];
      const double qr = query[b].real();
      const double qi = query[b].imag();
      re = std::fma(wr, qr, re);
      re = std::fma(wi, qi, re);
      im = std::fma(wr, qi, im);
      im = std::fma(-wi, qr, im);
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
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    acc[i & 3] = std::fma(p[i], p[i], acc[i & 3]);
  }
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

std::complex<double> dotc(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  const std::size_t n = 2 * a.size();
  double re[4] = {0.0, 0.0, 0.0, 0.0};
  double im[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    re[i & 3] = std::fma(pa[i], pb[i], re[i & 3]);
    im[i & 3] = std::fma(pa[i], pb[i ^ 1], im[i & 3]);
  }
  return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] - im[1]) + (im[2] - im[3])};
}

}  // namespace iafb::kernels::scalar
