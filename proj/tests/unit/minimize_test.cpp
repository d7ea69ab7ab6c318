// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiscord/minimize.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace qdiscord::opt;

TEST(golden_section, quadratic) {
  const auto r = golden_section([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, 0.0, 1.0);
  // A flat minimum pins x only to about sqrt(machine epsilon).
  EXPECT_NEAR(r.x, 0.3, 3e-8);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
}

TEST(golden_section, minimum_at_boundary_is_approached) {
  const auto r = golden_section([](double x) { return x; }, 0.0, 1.0);
  EXPECT_LT(r.x, 1e-9);
}

TEST(nelder_mead, anisotropic_quadratic) {
  const auto r = nelder_mead(
      [](const Point2& p) {
        return 3.0 * std::pow(p[0] - 1.0, 2) + 0.5 * std::pow(p[1] + 2.0, 2) +
               0.2 * (p[0] - 1.0) * (p[1] + 2.0);
      },
      {0.0, 0.0}, {.initial_step = 0.5});
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], -2.0, 1e-6);
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(nelder_mead, rosenbrock) {
  SimplexOptions options;
  options.initial_step = 0.5;
  options.max_evaluations = 20000;
  const auto r = nelder_mead(
      [](const Point2& p) {
        return std::pow(1 - p[0], 2) + 100 * std::pow(p[1] - p[0] * p[0], 2);
      },
      {-1.2, 1.0}, options);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}
