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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "iafb/kernels.hpp"

namespace iafb::kernels {

namespace {

Isa detect_best() {
  if (const char* forced = std::getenv("IAFB_ISA"); forced != nullptr) {
    if (std::string(forced) == "scalar") {
      return Isa::kScalar;
    }
  }
  return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect_best()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(IAFB_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("ISA not supported on this CPU: " + std::string(isa_name(isa)));
  }
  active().store(isa, std::memory_order_relaxed);
}

CodewordMatch best_codeword(const PlanarCodebookView& book,
                            std::span<const std::complex<double>> query) {
  if (query.size() != book.dim) {
    throw std::invalid_argument("best_codeword: query length differs from codebook dimension");
  }
#ifdef IAFB_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) {
    return avx2::best_codeword(book, query);
  }
#endif
  return scalar::best_codeword(book, query);
}

double sum_abs2(std::span<const std::complex<double>> x) {
#ifdef IAFB_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) {
    return avx2::sum_abs2(x);
  }
#endif
  return scalar::sum_abs2(x);
}

std::complex<double> dotc(std::span<const std::complex<double>> a,
                          std::span<const std::complex<double>> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dotc: length mismatch");
  }
#ifdef IAFB_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::kAvx2) {
    return avx2::dotc(a, b);
  }
#endif
  return scalar::dotc(a, b);
}

}  // namespace iafb::kernels
