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

#include "qdiscord/matcore.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

namespace qdiscord {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedTag: return "UnsupportedTag";
    case ErrorCode::NotExtendedX: return "NotExtendedX";
    case ErrorCode::NotXStructured: return "NotXStructured";
    case ErrorCode::NotXState: return "NotXState";
    case ErrorCode::NotTwoQubit: return "NotTwoQubit";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NumericalInput: return "NumericalInput";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NonHermitian,
                "max |M - M^dagger| = " + std::to_string(defect));
  }
  const auto n = m.rows();
  if (n == 0) return {};
  if (n == 1) return {m(0, 0).real()};
  if (n == 2) {
    auto [hi, lo] =
        hermitian_eigenvalues_2x2(m(0, 0).real(), m(1, 1).real(), m(0, 1));
    return {hi, lo};
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double entropy_bits(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < kEigenClipFloor) {
      throw Error(ErrorCode::InvalidState,
                  "eigenvalue " + std::to_string(lambda) + " below clip floor");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double trace_real(const ComplexMatrix& m) { return m.trace().real(); }

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "hs_inner operands differ");
  }
  // tr(AB) = sum_ij A_ij B_ji without forming the product.
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
  }
  return acc.real();
}

double hs_norm_sq(const ComplexMatrix& m) { return hs_inner(m, m); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

}  // namespace qdiscord
