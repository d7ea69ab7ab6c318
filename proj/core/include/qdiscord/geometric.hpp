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

// Geometric (Hilbert-Schmidt) discord of 2 (x) d states.
//
// States are expanded as
//   rho = (1/2d) (I + x.sigma (x) I + I (x) y.O + sum_ij T_ij sigma_i (x) O_j)
// with a traceless Hermitian basis O normalized to tr(O_i O_j) = d delta_ij,
// so that O = sigma at d = 2 and ||rho||^2 = (1 + |x|^2 + |y|^2 + |T|^2)/2d.

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "qdiscord/density_matrix.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

/// Generalized Gell-Mann matrices scaled to tr(O_i O_j) = d delta_ij.
/// Ordered as (symmetric, antisymmetric) per index pair j < k, then the
/// diagonal generators; d = 2 yields sigma_x, sigma_y, sigma_z.
std::vector<ComplexMatrix> operator_basis(int d);

struct BlochDecomposition {
  int d = 0;
  Eigen::Vector3d x;
  Eigen::VectorXd y;  // d^2 - 1
  Eigen::MatrixXd T;  // 3 x (d^2 - 1)
};

/// Throws DimensionMismatch unless rho is 2 (x) d.
BlochDecomposition bloch_decompose(const DensityMatrix& rho);

/// Inverse of bloch_decompose. The result is not PSD-checked.
ComplexMatrix bloch_reconstruct_matrix(const BlochDecomposition& decomp);

/// Inverse of bloch_decompose, validated.
DensityMatrix bloch_reconstruct(const BlochDecomposition& decomp);

struct ClassicalState {
  double t = 0.0;  // p1 - p2
  Eigen::Vector3d e;
  Eigen::VectorXd s_plus;
  Eigen::VectorXd s_minus;
  ComplexMatrix chi;
  bool psd = false;
};

/// chi = (1/2d)(I + t e.sigma (x) I + I (x) s_plus.O + e.sigma (x) s_minus.O).
ComplexMatrix classical_state_matrix(int d, double t, const Eigen::Vector3d& e,
                                     const Eigen::VectorXd& s_plus,
                                     const Eigen::VectorXd& s_minus);

struct GeometricDiscord {
  double value = 0.0;
  double k_max = 0.0;
  Eigen::Vector3d e;
  ClassicalState nearest;
};

/// (|x|^2 + |T|^2 - k_max) / 2d with k_max the top eigenvalue of
/// x x^T + T T^T, clipped at zero. The nearest classical state uses the
/// stationary t = x.e, s_plus = y, s_minus = T^T e.
GeometricDiscord geometric_discord(const DensityMatrix& rho);

/// Two-qubit X-state shortcut written in terms of the 2x2 transverse block of
/// T, T_zz and x_z. Throws NotTwoQubit, NotXState or NumericalInput.
double geometric_discord_x_compact(const DensityMatrix& rho,
                                   double tol = kDefaultStructureTol);

struct OracleOptions {
  int restarts = 32;
  int grid_theta = 24;
  int grid_phi = 48;
  std::uint64_t seed = 0x5eed;
};

/// Direct minimization of ||rho - chi||^2 over the measurement axis e, with
/// chi built explicitly for each e and the distance taken with hs_norm_sq.
double oracle_min_over_classical(const DensityMatrix& rho,
                                 const OracleOptions& options = {});

}  // namespace qdiscord
