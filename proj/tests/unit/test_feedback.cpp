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

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "iafb/feedback.hpp"
#include "iafb/rng.hpp"

using namespace iafb;
using testing::kThreeCell;

namespace {

// Grassmannian G(s, B) has complex dimension s (B - s); every fed-back entry
// is a line (s = 1). Ambient sizes follow from the filter shapes directly.
std::int64_t dimension_oracle(const FeedbackProfile& p, const NetworkConfig& cfg) {
  std::int64_t total = 0;
  for (int j = 0; j < cfg.G; ++j) {
    int type_two_others = 0;
    for (int i = p.g; i < cfg.G; ++i) {
      if (i != j) ++type_two_others;
    }
    for (int k = 0; k < cfg.K; ++k) {
      const int rows_of_r = p.m_at(cfg, j, k);
      const int a = rows_of_r - type_two_others * cfg.K * cfg.d;
      std::vector<int> ambient;
      for (int i = 0; i < p.g; ++i) ambient.push_back(a * p.n[i]);
      if (j >= p.g) ambient.push_back(a * cfg.K * cfg.d);
      for (int b : ambient) total += 1 * (b - 1);
    }
  }
  return total;
}

struct Fixture {
  NetworkConfig cfg;
  FeedbackProfile profile;
  ChannelSet h;
  OuterPrecoderSetII t2;
};

Fixture make_fixture(const NetworkConfig& cfg, const FeedbackProfile& profile, std::uint64_t seed) {
  Rng rng(seed);
  ChannelSet h = draw_channels(cfg, rng);
  OuterPrecoderSetII t2 = fixed_outer_precoders(cfg, profile, rng);
  return {cfg, profile, std::move(h), std::move(t2)};
}

}  // namespace

TEST_CASE("feedback dimensions of the reference profiles") {
  CHECK(feedback_dimension(testing::example1_profile(), testing::kExample1) == 4);
  CHECK(feedback_dimension(testing::example2_profile(), testing::kExample2) == 108);
  CHECK(feedback_dimension(testing::three_cell_profile(), kThreeCell) == 114);
  CHECK(feedback_dimension(full_cdi_profile(kThreeCell), kThreeCell) == 270);
  const FeedbackProfile truncated = truncated_cdi_profile(kThreeCell);
  CHECK(truncated.m[0] == 3);
  CHECK(feedback_dimension(truncated, kThreeCell) == 198);
}

TEST_CASE("feedback dimension matches the Grassmannian oracle on a grid") {
  int checked = 0;
  for (int G = 1; G <= 3; ++G) {
    for (int K = 1; K <= 2; ++K) {
      for (int d = 1; d <= 2; ++d) {
        for (int N = K * d; N <= 5; ++N) {
          for (int M = d; M <= std::min(5, (G - 1) * K * d + d); ++M) {
            const NetworkConfig cfg{G, K, N, M, d};
            for (int m = 1; m <= M; ++m) {
              for (int g = 0; g <= G; ++g) {
                for (int n = 1; n <= N; ++n) {
                  const FeedbackProfile p = FeedbackProfile::uniform(cfg, m, g, std::vector<int>(g, n));
                  bool a_positive = true;
                  for (int j = 0; j < G; ++j) {
                    a_positive = a_positive && a_dim(p, cfg, j, 0) >= 1;
                  }
                  if (!a_positive) {
                    CHECK_THROWS_AS(feedback_dimension(p, cfg), std::invalid_argument);
                    continue;
                  }
                  CHECK(feedback_dimension(p, cfg) == dimension_oracle(p, cfg));
                  std::int64_t from_tuples = 0;
                  for (int j = 0; j < G; ++j) {
                    for (int k = 0; k < K; ++k) {
                      for (const auto& e : grassmann_tuple(p, cfg, j, k)) {
                        CHECK(e.subspace_dim == 1);
                        from_tuples += e.subspace_dim * (e.ambient - e.subspace_dim);
                      }
                    }
                  }
                  CHECK(feedback_dimension(p, cfg) == from_tuples);
                  ++checked;
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("profile validation") {
  FeedbackProfile p = testing::three_cell_profile();
  CHECK_NOTHROW(validate_profile(p, kThreeCell));
  p.m[3] = 5;
  CHECK_THROWS_AS(validate_profile(p, kThreeCell), std::invalid_argument);
  p = testing::three_cell_profile();
  p.n.push_back(4);
  CHECK_THROWS_AS(validate_profile(p, kThreeCell), std::invalid_argument);
  p = testing::three_cell_profile();
  p.g = 4;
  CHECK_THROWS_AS(validate_profile(p, kThreeCell), std::invalid_argument);
  // GKd + d - N = 7 > M.
  CHECK_THROWS_AS(truncated_cdi_profile({3, 2, 2, 4, 1}), std::invalid_argument);
}

TEST_CASE("grassmann tuple layout") {
  const FeedbackProfile p = testing::three_cell_profile();
  const auto cell0 = grassmann_tuple(p, kThreeCell, 0, 1);
  REQUIRE(cell0.size() == 2);
  CHECK(cell0[0].source == 0);
  CHECK(cell0[0].ambient == 8);
  CHECK(cell0[1].ambient == 6);
  const auto cell2 = grassmann_tuple(p, kThreeCell, 2, 0);
  REQUIRE(cell2.size() == 3);
  CHECK(cell2[2].source == 2);
  CHECK(cell2[2].ambient == 8);
  CHECK(a_dim(p, kThreeCell, 0, 0) == 2);
  CHECK(a_dim(p, kThreeCell, 2, 0) == 4);
}

TEST_CASE("filter shapes, unit norms and nulling") {
  const Fixture f = make_fixture(kThreeCell, testing::three_cell_profile(), 21);
  const EffectiveCsiSet eff = apply_filter(f.h, f.profile, f.t2, f.cfg);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 2; ++k) {
      const int q = f.cfg.ms(j, k);
      const CMatrix& r = eff.r[q];
      CHECK(r.rows() == 4);
      CHECK(static_cast<int>(r.cols()) == eff.a[q]);
      CHECK(semi_unitary_error(r) < 1e-10);
      for (int i = 2; i < 3; ++i) {
        if (i == j) continue;
        const CMatrix leak = adjoint_times(r, f.h(j, k, i) * f.t2.at(i));
        CHECK(leak.frobenius_norm() < 1e-9 * f.h(j, k, i).frobenius_norm());
      }
      for (int i = 0; i < 3; ++i) {
        const CMatrix& he = eff.effective(q, i);
        const bool present = i < 2 || i == j;
        CHECK(he.empty() == !present);
        if (!present) continue;
        CHECK(he.frobenius_norm() == doctest::Approx(1.0));
        CHECK(static_cast<int>(he.rows()) == eff.a[q]);
        CHECK(he.cols() == static_cast<std::size_t>(i < 2 ? f.profile.n[i] : 2));
      }
    }
  }
}

TEST_CASE("rows and columns outside the profile never reach the filter output") {
  const Fixture f = make_fixture(kThreeCell, FeedbackProfile::uniform(kThreeCell, 3, 2, {3, 2}), 22);
  const EffectiveCsiSet base = apply_filter(f.h, f.profile, f.t2, f.cfg);
  ChannelSet scrubbed = f.h;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 3; ++i) {
        CMatrix& h = scrubbed(j, k, i);
        for (std::size_t c = 0; c < 4; ++c) h(3, c) = 0.0;
        if (i < 2) {
          for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = static_cast<std::size_t>(f.profile.n[i]); c < 4; ++c) h(r, c) = 0.0;
          }
        }
      }
    }
  }
  const EffectiveCsiSet again = apply_filter(scrubbed, f.profile, f.t2, f.cfg);
  CHECK(again.he == base.he);
  CHECK(again.r == base.r);
}

TEST_CASE("effective CSI is invariant to channel scaling") {
  const Fixture f = make_fixture(kThreeCell, testing::three_cell_profile(), 23);
  ChannelSet scaled = f.h;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 3; ++i) scaled(j, k, i) *= cd(0.0, 4.0);
    }
  }
  const EffectiveCsiSet a = apply_filter(f.h, f.profile, f.t2, f.cfg);
  const EffectiveCsiSet b = apply_filter(scaled, f.profile, f.t2, f.cfg);
  for (std::size_t x = 0; x < a.he.size(); ++x) {
    if (a.he[x].empty()) continue;
    // The null-space basis may rotate; the column Gram may not.
    CHECK(max_abs_diff(adjoint_times(a.he[x], a.he[x]), adjoint_times(b.he[x], b.he[x])) < 1e-10);
  }
}

TEST_CASE("filter reports unusable profiles") {
  const Fixture f = make_fixture(kThreeCell, FeedbackProfile::uniform(kThreeCell, 2, 2, {4, 4}), 24);
  // A = 2 - 2 = 0 for cells 0 and 1.
  CHECK_THROWS_AS(apply_filter(f.h, f.profile, f.t2, f.cfg), std::invalid_argument);
}

TEST_CASE("type-II outer precoders are semi-unitary and only exist for type-II BSs") {
  Rng rng(25);
  const auto t2 = fixed_outer_precoders(kThreeCell, testing::three_cell_profile(), rng);
  CHECK(t2.at(0).empty());
  CHECK(t2.at(1).empty());
  CHECK(t2.at(2).rows() == 4);
  CHECK(t2.at(2).cols() == 2);
  CHECK(semi_unitary_error(t2.at(2)) < 1e-10);
}
