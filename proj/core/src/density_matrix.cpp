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

#include "qdiscord/density_matrix.hpp"

#include <algorithm>
#include <string>

namespace qdiscord {

DensityMatrix DensityMatrix::validate(ComplexMatrix matrix, int dim_b,
                                      int dim_a) {
  if (dim_a < 1 || dim_a > 2 || dim_b < 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "unsupported dims " + std::to_string(dim_a) + "x" +
                    std::to_string(dim_b));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (matrix.rows() != n || matrix.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrix, got " + std::to_string(matrix.rows()) + "x" +
                    std::to_string(matrix.cols()));
  }
  const double defect = hermiticity_defect(matrix);
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NonHermitian,
                "max |M - M^dagger| = " + std::to_string(defect));
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kHermitianTol) {
    throw Error(ErrorCode::TraceNotOne,
                "trace = " + std::to_string(tr.real()) + " + " +
                    std::to_string(tr.imag()) + "i");
  }
  const auto values = hermitian_eigenvalues(matrix);
  if (values.back() < kEigenClipFloor) {
    throw Error(ErrorCode::NotPSD,
                "smallest eigenvalue " + std::to_string(values.back()));
  }
  return DensityMatrix(std::move(matrix), dim_a, dim_b);
}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix matrix, int dim_a,
                                          int dim_b) {
  return DensityMatrix(std::move(matrix), dim_a, dim_b);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto values = hermitian_eigenvalues(rho.matrix());
  return entropy_bits(values);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem over) {
  if (!rho.is_qubit_qudit()) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial trace needs a 2 (x) d state");
  }
  const int d = rho.dim_b();
  if (over == Subsystem::A) {
    ComplexMatrix reduced = rho.block(0, 0) + rho.block(1, 1);
    return DensityMatrix::from_trusted(std::move(reduced), 1, d);
  }
  ComplexMatrix reduced(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) reduced(i, j) = rho.block(i, j).trace();
  }
  return DensityMatrix::from_trusted(std::move(reduced), 1, 2);
}

}  // namespace qdiscord
