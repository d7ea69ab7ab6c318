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

#include "qdiscord/xblocks.hpp"

#include <algorithm>
#include <functional>

#include <Eigen/Eigenvalues>

namespace qdiscord {

OrbitDecomposition extended_x_orbits(int d) {
  if (d < 2) throw Error(ErrorCode::DimensionMismatch, "orbits need d >= 2");
  OrbitDecomposition out;
  out.d = d;
  out.quartets.reserve(static_cast<std::size_t>(d / 2));
  for (int r = 0; r < d / 2; ++r) {
    out.quartets.push_back({r, d - 1 - r, d + r, 2 * d - 1 - r});
  }
  if (d % 2 == 1) {
    const int mid = d / 2;
    out.doublet = std::array<int, 2>{mid, d + mid};
  }
  return out;
}

std::vector<double> eigenvalues_extended_x_unchecked(const ComplexMatrix& m) {
  const int d = static_cast<int>(m.rows() / 2);
  const auto orbits = extended_x_orbits(d);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * d));

  Eigen::Matrix4cd sub;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver;
  for (const auto& q : orbits.quartets) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) sub(i, j) = m(q[i], q[j]);
    }
    solver.compute(sub, Eigen::EigenvaluesOnly);
    for (int i = 0; i < 4; ++i) out.push_back(solver.eigenvalues()(i));
  }
  if (orbits.doublet) {
    const auto [i, j] = *orbits.doublet;
    auto [hi, lo] = hermitian_eigenvalues_2x2(m(i, i).real(), m(j, j).real(),
                                              m(i, j));
    out.push_back(hi);
    out.push_back(lo);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> eigenvalues_extended_x(const DensityMatrix& rho,
                                           double tol) {
  if (!rho.is_qubit_qudit() || !has_extended_x_pattern(rho.matrix(), tol)) {
    throw Error(ErrorCode::NotExtendedX,
                "state does not have block-X structure");
  }
  return eigenvalues_extended_x_unchecked(rho.matrix());
}

void append_eigenvalues_x_unchecked(const ComplexMatrix& m,
                                    std::vector<double>& out) {
  const auto n = m.rows();
  for (Eigen::Index r = 0; r < n / 2; ++r) {
    const auto s = n - 1 - r;
    auto [hi, lo] =
        hermitian_eigenvalues_2x2(m(r, r).real(), m(s, s).real(), m(r, s));
    out.push_back(hi);
    out.push_back(lo);
  }
  if (n % 2 == 1) out.push_back(m(n / 2, n / 2).real());
}

std::vector<double> eigenvalues_x(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || !has_x_pattern(m, tol)) {
    throw Error(ErrorCode::NotXStructured, "matrix does not have X structure");
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NonHermitian, "X matrix is not Hermitian");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  append_eigenvalues_x_unchecked(m, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace qdiscord
