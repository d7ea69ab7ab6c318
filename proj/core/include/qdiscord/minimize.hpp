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

#pragma once

// Low-dimensional derivative-free minimizers used by the discord optimizers.

#include <array>
#include <functional>

namespace qdiscord::opt {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a minimum of f on [lo, hi]. Stops when the
/// bracket is narrower than x_tol. The returned point is the best evaluated
/// one, so value <= min(f(lo), f(hi)) is not implied.
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo,
                             double hi, double x_tol = 1e-10,
                             int max_iterations = 200);

using Point2 = std::array<double, 2>;

struct SimplexOptions {
  double initial_step = 0.05;
  double f_tol = 1e-10;  // spread of simplex values
  double x_tol = 1e-9;   // simplex diameter
  int max_evaluations = 4000;
  int restarts = 2;      // re-seed the simplex at the best vertex on exit
};

struct SimplexMinimum {
  Point2 x{};
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead on R^2 with standard coefficients (1, 2, 0.5, 0.5).
SimplexMinimum nelder_mead(const std::function<double(const Point2&)>& f,
                           Point2 start, const SimplexOptions& options = {});

}  // namespace qdiscord::opt
