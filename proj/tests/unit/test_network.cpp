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

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "iafb/network.hpp"
#include "iafb/rng.hpp"

using namespace iafb;
using testing::kThreeCell;

TEST_CASE("config validation") {
  CHECK(config_violations(kThreeCell).empty());
  CHECK(config_violations(testing::kExample1).empty());
  CHECK(config_violations(testing::kExample2).empty());

  // M above (G-1)Kd + d.
  const auto wide = config_violations({3, 2, 4, 6, 1});
  REQUIRE(wide.size() == 1);
  CHECK(wide[0].find("M <=") != std::string::npos);
  // N below Kd and d above M at once: every violation is listed.
  CHECK(config_violations({2, 3, 2, 1, 2}).size() >= 2);
  CHECK_FALSE(config_violations({0, 1, 1, 1, 1}).empty());
  CHECK_THROWS_AS(validate_config({3, 2, 1, 4, 1}), std::invalid_argument);
  CHECK_NOTHROW(validate_config(kThreeCell));
}

TEST_CASE("channel draws are deterministic and ordered by (j, k, i)") {
  Rng a(11);
  Rng b(11);
  const ChannelSet x = draw_channels(kThreeCell, a);
  const ChannelSet y = draw_channels(kThreeCell, b);
  Rng manual(11);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int i = 0; i < 3; ++i) {
        CHECK(x(j, k, i) == y(j, k, i));
        CHECK(x(j, k, i) == random_gaussian(4, 4, manual));
      }
    }
  }
}

TEST_CASE("channel entries are CN(0, 1)") {
  Rng rng(12);
  double power = 0.0;
  double re_mean = 0.0;
  double cross = 0.0;
  int count = 0;
  for (int t = 0; t < 400; ++t) {
    const ChannelSet h = draw_channels(kThreeCell, rng);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 3; ++i) {
          for (const cd& z : h(j, k, i).data()) {
            power += std::norm(z);
            re_mean += z.real();
            cross += z.real() * z.imag();
            ++count;
          }
        }
      }
    }
  }
  CHECK(power / count == doctest::Approx(1.0).epsilon(0.01));
  CHECK(std::abs(re_mean / count) < 0.01);
  CHECK(std::abs(cross / count) < 0.01);
}

TEST_CASE("ChannelSet rejects malformed input") {
  std::vector<CMatrix> few(3, CMatrix(4, 4));
  CHECK_THROWS_AS(ChannelSet(kThreeCell, few), std::invalid_argument);
  std::vector<CMatrix> wrong(18, CMatrix(4, 3));
  CHECK_THROWS_AS(ChannelSet(kThreeCell, wrong), std::invalid_argument);
  std::vector<CMatrix> nan(18, CMatrix(4, 4));
  nan[5](0, 0) = cd(std::nan(""), 0.0);
  CHECK_THROWS_AS(ChannelSet(kThreeCell, nan), std::invalid_argument);
}
