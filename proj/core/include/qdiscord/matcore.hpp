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

// Complex linear-algebra kernel shared by every other module.

#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qdiscord/errors.hpp"

namespace qdiscord {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenClipFloor = -1e-8;

/// Largest entry of |M - M^dagger|. Zero for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix& m);

/// Real eigenvalues of a Hermitian matrix in descending order.
///
/// 1x1 and 2x2 inputs use closed forms; larger matrices go through Eigen's
/// self-adjoint solver. Throws NonHermitian when the defect exceeds
/// kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Both eigenvalues of [[a, c], [conj(c), b]], larger first.
inline std::pair<double, double> hermitian_eigenvalues_2x2(double a, double b,
                                                           Complex c) {
  const double mean = 0.5 * (a + b);
  const double half_gap = 0.5 * (a - b);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(c));
  return {mean + radius, mean - radius};
}

/// Shannon entropy in bits of a spectrum, with 0 log 0 = 0.
///
/// Entries in [kEigenClipFloor, 0) are treated as zero; anything more
/// negative throws InvalidState.
double entropy_bits(std::span<const double> eigenvalues);

double trace_real(const ComplexMatrix& m);

/// tr(A B). Real for a Hermitian pair; the imaginary part is discarded.
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm_sq(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qdiscord
