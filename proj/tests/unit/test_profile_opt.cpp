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

#include <algorithm>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "iafb/profile_opt.hpp"

using namespace iafb;
using testing::kThreeCell;

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

TEST_CASE("closed-form counts on the reference configs") {
  CHECK(n_one(kThreeCell) == 4);
  CHECK(n_zero(kThreeCell) == 4);
  CHECK(g_one(kThreeCell) == 1);
  CHECK(g_zero(kThreeCell) == 2);
  CHECK(d_lower_bound(kThreeCell) == -18);

  CHECK(n_one(testing::kExample1) == 3);
  CHECK(g_one(testing::kExample1) == 0);
  CHECK(d_lower_bound(testing::kExample1) == -2 * 4);

  CHECK(n_zero(testing::kExample2) == 5);
  CHECK(g_zero(testing::kExample2) == 1);

  // N0 rounds N down to a multiple of d.
  CHECK(n_zero({3, 1, 5, 4, 2}) == 4);
  CHECK_THROWS_AS(g_one({2, 2, 2, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(g_zero({2, 2, 2, 3, 1}), std::invalid_argument);
}

TEST_CASE("g1 and g0 track their defining expressions") {
  for (int G = 2; G <= 5; ++G) {
    for (int K = 1; K <= 3; ++K) {
      for (int d = 1; d <= 2; ++d) {
        for (int N = K * d + 1; N <= 12; ++N) {
          for (int M = d; M <= (G - 1) * K * d + d; ++M) {
            const NetworkConfig cfg{G, K, N, M, d};
            const long num = static_cast<long>(G) * ((G - 1) * K * d - M + d);
            const int n1 = std::min(G * K * d, N);
            const int n0 = std::min(G * K * d, (N / d) * d);
            CHECK(g_one(cfg) == std::max(0L, num / (n1 - K * d)));
            if (n0 > K * d) {
              CHECK(g_zero(cfg) == std::max(0L, ceil_div(num, n0 - K * d)));
            }
            if (g_one(cfg) == 0) {
              CHECK(d_lower_bound(cfg) == -static_cast<long>(K) * G * G);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("greedy profile on the three-cell config") {
  const GreedyResult r = greedy_profile(kThreeCell);
  CHECK(r.g0 == 2);
  CHECK(r.n0 == 4);
  CHECK(r.initial == FeedbackProfile::uniform(kThreeCell, 4, 2, {4, 4}));
  CHECK(r.profile.g == 2);
  CHECK(r.profile.m == std::vector<int>(6, 4));
  std::vector<int> n = r.profile.n;
  std::sort(n.begin(), n.end());
  CHECK(n == std::vector<int>{3, 4});
  CHECK(feedback_dimension(r.profile, kThreeCell) == 114);
  CHECK(check_sufficient(r.profile, kThreeCell).sufficient_ok);
  CHECK(witness_violation(r.witness, r.profile, kThreeCell).empty());
  CHECK(witness_violation(r.witness, r.initial, kThreeCell).empty());
}

TEST_CASE("greedy profile in the zero-forcing regime keeps every BS type II") {
  const GreedyResult r = greedy_profile(testing::kExample1);
  CHECK(r.g0 == 0);
  CHECK(r.profile == testing::example1_profile());
  CHECK(check_sufficient(r.profile, testing::kExample1).sufficient_ok);
}

TEST_CASE("greedy profiles are sufficient and no larger than the initial profile") {
  int built = 0;
  for (int G = 2; G <= 4; ++G) {
    for (int K = 1; K <= 2; ++K) {
      for (int d = 1; d <= 2; ++d) {
        for (int N = K * d + 1; N <= 8; ++N) {
          for (int M = d; M <= (G - 1) * K * d + d; ++M) {
            const NetworkConfig cfg{G, K, N, M, d};
            if (n_zero(cfg) <= K * d) {
              CHECK_THROWS_AS(greedy_profile(cfg), std::invalid_argument);
              continue;
            }
            if (g_zero(cfg) > G) {
              CHECK_THROWS_AS(greedy_profile(cfg), UnachievableError);
              continue;
            }
            const GreedyResult r = greedy_profile(cfg);
            CHECK(r.profile.g >= g_zero(cfg));
            if (r.profile.g > g_zero(cfg)) {
              // Every smaller count fails even before antenna reduction.
              for (int g = g_zero(cfg); g < r.profile.g; ++g) {
                const auto p = FeedbackProfile::uniform(cfg, M, g, std::vector<int>(g, r.n0));
                CHECK_FALSE(check_necessary_flow(p, cfg).necessary_ok);
              }
            }
            CHECK(check_sufficient(r.profile, cfg).sufficient_ok);
            CHECK(witness_violation(r.witness, r.profile, cfg).empty());
            for (int i = 0; i < r.profile.g; ++i) {
              CHECK(r.profile.n[i] % d == 0);
              CHECK(r.profile.n[i] <= r.n0);
              CHECK(r.profile.n[i] >= K * d);
            }
            for (int m : r.profile.m) {
              CHECK(m <= M);
            }
            CHECK(feedback_dimension(r.profile, cfg) <= feedback_dimension(r.initial, cfg));
            CHECK(d_lower_bound(cfg) <= feedback_dimension(r.profile, cfg));
            ++built;
          }
        }
      }
    }
  }
  CHECK(built > 50);
}

TEST_CASE("type-I count grows past g0 when a type-I cell faces too many type-II BSs") {
  // g0 = 1 leaves MSs of cell 1 facing one type-II BS: 2 - 2 - 1 < 0.
  const NetworkConfig cfg{2, 2, 4, 2, 1};
  CHECK(g_zero(cfg) == 1);
  const auto literal = FeedbackProfile::uniform(cfg, 2, 1, {4});
  CHECK(basic_violation(literal, cfg).has_value());
  const GreedyResult r = greedy_profile(cfg);
  CHECK(r.g0 == 1);
  CHECK(r.profile.g == 2);
  CHECK(check_sufficient(r.profile, cfg).sufficient_ok);
}

TEST_CASE("lower bound holds on a large single-user-per-cell config") {
  const NetworkConfig cfg{30, 1, 23, 23, 1};
  const GreedyResult r = greedy_profile(cfg);
  CHECK(check_necessary_flow(r.profile, cfg).necessary_ok);
  CHECK(d_lower_bound(cfg) <= feedback_dimension(r.profile, cfg));
}

TEST_CASE("asymptotic ratios") {
  CHECK(asymptotic_ratio(0.75, 0.75, 1) == doctest::Approx(1.0 / 48.0).epsilon(1e-12));
  CHECK(full_cdi_ratio(0.75, 0.75, 1) == doctest::Approx(0.25 * 0.0625 / (0.5625 * 0.75)).epsilon(1e-12));
  CHECK(full_cdi_ratio(0.6, 0.6, 1) == doctest::Approx(0.4 * 0.16 / (0.36 * 0.6)).epsilon(1e-12));
  CHECK(asymptotic_ratio(1.0 - 1e-9, 0.5, 1) < 1e-8);
  for (double c1 = 0.05; c1 < 2.0; c1 += 0.05) {
    for (double c2 = 0.05; c2 < 2.0; c2 += 0.05) {
      if (c1 + c2 <= 2.0) continue;
      CHECK(full_cdi_ratio(c1, c2, 2) < 1.0);
    }
  }
  CHECK_THROWS_AS(asymptotic_ratio(0.3, 0.3, 1), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_ratio(1.2, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(full_cdi_ratio(0.0, 1.5, 2), std::invalid_argument);
}
