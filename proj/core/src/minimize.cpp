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

#include <algorithm>
#include <cmath>

namespace qdiscord::opt {

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo,
                             double hi, double x_tol, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  ScalarMinimum best{c, fc, 2};
  if (fd < best.value) best = {d, fd, 2};

  for (int it = 0; it < max_iterations && (b - a) > x_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {c, fc, best.evaluations};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {d, fd, best.evaluations};
    }
    ++best.evaluations;
  }
  return best;
}

namespace {

struct Vertex {
  Point2 x;
  double f;
};

Point2 affine(const Point2& base, const Point2& toward, double t) {
  return {base[0] + t * (toward[0] - base[0]),
          base[1] + t * (toward[1] - base[1])};
}

}  // namespace

SimplexMinimum nelder_mead(const std::function<double(const Point2&)>& f,
                           Point2 start, const SimplexOptions& options) {
  SimplexMinimum result{start, f(start), 1};

  for (int round = 0; round <= options.restarts; ++round) {
    const double h = options.initial_step;
    std::array<Vertex, 3> s{
        Vertex{result.x, result.value},
        Vertex{{result.x[0] + h, result.x[1]}, 0.0},
        Vertex{{result.x[0], result.x[1] + h}, 0.0}};
    s[1].f = f(s[1].x);
    s[2].f = f(s[2].x);
    result.evaluations += 2;

    while (result.evaluations < options.max_evaluations) {
      std::sort(s.begin(), s.end(),
                [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      const double spread = s[2].f - s[0].f;
      double diameter = 0.0;
      for (int i = 1; i < 3; ++i) {
        diameter = std::max(diameter, std::hypot(s[i].x[0] - s[0].x[0],
                                                 s[i].x[1] - s[0].x[1]));
      }
      if (spread <= options.f_tol && diameter <= options.x_tol) break;

      const Point2 centroid{0.5 * (s[0].x[0] + s[1].x[0]),
                            0.5 * (s[0].x[1] + s[1].x[1])};
      const Point2 xr = affine(centroid, s[2].x, -1.0);
      const double fr = f(xr);
      ++result.evaluations;
      if (fr < s[0].f) {
        const Point2 xe = affine(centroid, s[2].x, -2.0);
        const double fe = f(xe);
        ++result.evaluations;
        s[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        continue;
      }
      if (fr < s[1].f) {
        s[2] = {xr, fr};
        continue;
      }
      const bool outside = fr < s[2].f;
      const Point2 xc = outside ? affine(centroid, xr, 0.5)
                                : affine(centroid, s[2].x, 0.5);
      const double fc = f(xc);
      ++result.evaluations;
      if (fc < (outside ? fr : s[2].f)) {
        s[2] = {xc, fc};
        continue;
      }
      for (int i = 1; i < 3; ++i) {
        s[i].x = affine(s[0].x, s[i].x, 0.5);
        s[i].f = f(s[i].x);
      }
      result.evaluations += 2;
    }
    const auto best = std::min_element(
        s.begin(), s.end(),
        [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (best->f < result.value) {
      result.x = best->x;
      result.value = best->f;
    }
  }
  return result;
}

}  // namespace qdiscord::opt
