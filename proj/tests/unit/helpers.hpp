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
#include <vector>

#include "iafb/cmatrix.hpp"
#include "iafb/feedback.hpp"
#include "iafb/network.hpp"
#include "iafb/rng.hpp"

namespace iafb::testing {

inline CMatrix random_hermitian(std::size_t n, Rng& rng) {
  const CMatrix b = random_gaussian(n, n, rng);
  return b + b.adjoint();
}

inline CMatrix random_psd(std::size_t n, Rng& rng) {
  const CMatrix b = random_gaussian(n, n, rng);
  return adjoint_times(b, b);
}

inline std::vector<cd> random_vector(std::size_t n, Rng& rng) {
  std::vector<cd> v(n);
  for (auto& z : v) {
    z = rng.complex_normal();
  }
  return v;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline const NetworkConfig kThreeCell{3, 2, 4, 4, 1};
inline const NetworkConfig kExample1{2, 2, 3, 3, 1};
inline const NetworkConfig kExample2{2, 3, 5, 3, 1};

inline FeedbackProfile three_cell_profile() { return FeedbackProfile::uniform(kThreeCell, 4, 2, {4, 3}); }
inline FeedbackProfile example1_profile() { return FeedbackProfile::uniform(kExample1, 3, 0, {}); }
inline FeedbackProfile example2_profile() { return FeedbackProfile::uniform(kExample2, 2, 2, {5, 5}); }

}  // namespace iafb::testing
