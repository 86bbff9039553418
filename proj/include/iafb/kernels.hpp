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

// Data-parallel inner loops with a scalar reference and an AVX2/FMA variant.
//
// Every variant performs the same floating-point operations in the same
// order (four interleaved partial sums, fused multiply-adds, fixed final
// combination), so all ISAs return bit-identical results. The scalar
// versions are the reference the SIMD versions are tested against.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace iafb::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

/// ISA used by the dispatching entry points below. Defaults to the best
/// supported ISA; the environment variable IAFB_ISA=scalar forces the
/// reference path.
Isa active_isa();
/// Overrides the dispatch choice. Throws if the ISA is not supported here.
void set_active_isa(Isa isa);

/// Codebook in planar, dimension-major layout: entry c, coordinate b lives
/// at re[b * stride + c] / im[b * stride + c].
struct PlanarCodebookView {
  const double* re = nullptr;
  const double* im = nullptr;
  std::size_t count = 0;
  std::size_t stride = 0;
  std::size_t dim = 0;
};

struct CodewordMatch {
  std::size_t index = 0;
  double gain = 0.0;  // |<codeword, query>|^2
};

/// argmax_c |sum_b conj(w_cb) q_b|^2; ties go to the lowest index.
CodewordMatch best_codeword(const PlanarCodebookView& book,
                            std::span<const std::complex<double>> query);

/// sum_i |x_i|^2
double sum_abs2(std::span<const std::complex<double>> x);

/// sum_i conj(a_i) b_i
std::complex<double> dotc(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b);

// ISA-specific entry points, exposed for equivalence tests and benchmarks.
namespace scalar {
CodewordMatch best_codeword(const PlanarCodebookView& book,
                            std::span<const std::complex<double>> query);
double sum_abs2(std::span<const std::complex<double>> x);
std::complex<double> dotc(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define IAFB_HAVE_AVX2_KERNELS 1
namespace avx2 {
CodewordMatch best_codeword(const PlanarCodebookView& book,
                            std::span<const std::complex<double>> query);
double sum_abs2(std::span<const std::complex<double>> x);
std::complex<double> dotc(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b);
}  // namespace avx2
#endif

}  // namespace iafb::kernels
