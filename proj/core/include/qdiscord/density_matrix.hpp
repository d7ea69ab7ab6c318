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

#include "qdiscord/matcore.hpp"

namespace qdiscord {

enum class Subsystem { A, B };

/// A validated density matrix on C^dim_a (x) C^dim_b.
///
/// Bipartite operations require dim_a == 2. Single-party states (marginals,
/// odd-dimensional maximally mixed states) carry dim_a == 1.
class DensityMatrix {
 public:
  /// Checks Hermiticity (1e-10), unit trace (1e-10) and PSD (-1e-8) and
  /// throws NonHermitian, TraceNotOne, NotPSD or DimensionMismatch.
  static DensityMatrix validate(ComplexMatrix matrix, int dim_b, int dim_a = 2);

  /// Skips the spectral checks. For constructions whose output is a density
  /// matrix by construction (channels, normalized Gram matrices, marginals).
  static DensityMatrix from_trusted(ComplexMatrix matrix, int dim_a, int dim_b);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }
  bool is_qubit_qudit() const noexcept { return dim_a_ == 2; }

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(int row, int col) const { return matrix_(row, col); }

  /// The four d x d blocks of a 2 (x) d state. Index 0 is the |0><0| block.
  Eigen::Block<const ComplexMatrix> block(int a_row, int a_col) const {
    return matrix_.block(a_row * dim_b_, a_col * dim_b_, dim_b_, dim_b_);
  }

 private:
  DensityMatrix(ComplexMatrix matrix, int dim_a, int dim_b)
      : matrix_(std::move(matrix)), dim_a_(dim_a), dim_b_(dim_b) {}

  ComplexMatrix matrix_;
  int dim_a_;
  int dim_b_;
};

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Partial trace of a 2 (x) d state. Tracing A sums the diagonal blocks;
/// tracing B gives the 2x2 matrix of block traces.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem over);

}  // namespace qdiscord
