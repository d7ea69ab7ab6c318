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

#include "qdiscord/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "qdiscord/minimize.hpp"

namespace qdiscord {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_bipartite(const DensityMatrix& rho) {
  if (!rho.is_qubit_qudit()) {
    throw Error(ErrorCode::DimensionMismatch,
                "geometric discord needs a 2 (x) d state");
  }
}

const std::array<ComplexMatrix, 3>& paulis() {
  static const std::array<ComplexMatrix, 3> kPaulis{pauli_x(), pauli_y(),
                                                    pauli_z()};
  return kPaulis;
}

ComplexMatrix combine(const std::vector<ComplexMatrix>& basis,
                      const Eigen::VectorXd& coeffs, int d) {
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out += coeffs(static_cast<Eigen::Index>(j)) * basis[j];
  }
  return out;
}

ComplexMatrix pauli_combination(const Eigen::Vector3d& v) {
  const auto& s = paulis();
  return v(0) * s[0] + v(1) * s[1] + v(2) * s[2];
}

// tr(rho (P (x) Q)) = sum_ab P_ba tr(rho_ab Q).
double expectation(const DensityMatrix& rho, const ComplexMatrix& p,
                   const ComplexMatrix& q) {
  Complex acc{0.0, 0.0};
  const int d = rho.dim_b();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (p(b, a) == Complex{}) continue;
      Complex tr_block{0.0, 0.0};
      const auto block = rho.block(a, b);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) tr_block += block(i, j) * q(j, i);
      }
      acc += p(b, a) * tr_block;
    }
  }
  return acc.real();
}

// Lexicographically largest unit vector in the span of the given columns.
Eigen::Vector3d lexicographic_max(const Eigen::MatrixXd& span) {
  const Eigen::Matrix3d projector = span * span.transpose();
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d v = projector.col(k);
    if (v.norm() > 1e-12) return v.normalized();
  }
  return span.col(0);
}

}  // namespace

std::vector<ComplexMatrix> operator_basis(int d) {
  if (d < 2) throw Error(ErrorCode::DimensionMismatch, "basis needs d >= 2");
  const double scale = std::sqrt(d / 2.0);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(d * d - 1));
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = sym(k, j) = scale;
      out.push_back(std::move(sym));
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = Complex(0.0, -scale);
      anti(k, j) = Complex(0.0, scale);
      out.push_back(std::move(anti));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double norm = scale * std::sqrt(2.0 / (l * (l + 1.0)));
    for (int k = 0; k < l; ++k) diag(k, k) = norm;
    diag(l, l) = -l * norm;
    out.push_back(std::move(diag));
  }
  return out;
}

BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
  require_bipartite(rho);
  const int d = rho.dim_b();
  const auto basis = operator_basis(d);
  const auto n = static_cast<Eigen::Index>(basis.size());
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id_d = ComplexMatrix::Identity(d, d);

  BlochDecomposition out;
  out.d = d;
  out.y.resize(n);
  out.T.resize(3, n);
  for (int i = 0; i < 3; ++i) out.x(i) = expectation(rho, paulis()[i], id_d);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& o = basis[static_cast<std::size_t>(j)];
    out.y(j) = expectation(rho, id2, o);
    for (int i = 0; i < 3; ++i) out.T(i, j) = expectation(rho, paulis()[i], o);
  }
  return out;
}

ComplexMatrix bloch_reconstruct_matrix(const BlochDecomposition& decomp) {
  const int d = decomp.d;
  const auto basis = operator_basis(d);
  if (decomp.y.size() != static_cast<Eigen::Index>(basis.size()) ||
      decomp.T.cols() != decomp.y.size() || decomp.T.rows() != 3) {
    throw Error(ErrorCode::DimensionMismatch, "Bloch components do not match d");
  }
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id_d = ComplexMatrix::Identity(d, d);
  ComplexMatrix out = kron(id2 + pauli_combination(decomp.x), id_d);
  out += kron(id2, combine(basis, decomp.y, d));
  for (int i = 0; i < 3; ++i) {
    out += kron(paulis()[i], combine(basis, decomp.T.row(i).transpose(), d));
  }
  return out / (2.0 * d);
}

DensityMatrix bloch_reconstruct(const BlochDecomposition& decomp) {
  return DensityMatrix::validate(bloch_reconstruct_matrix(decomp), decomp.d);
}

ComplexMatrix classical_state_matrix(int d, double t, const Eigen::Vector3d& e,
                                     const Eigen::VectorXd& s_plus,
                                     const Eigen::VectorXd& s_minus) {
  const auto basis = operator_basis(d);
  const ComplexMatrix e_sigma = pauli_combination(e);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out = kron(id2 + t * e_sigma, ComplexMatrix::Identity(d, d));
  out += kron(id2, combine(basis, s_plus, d));
  out += kron(e_sigma, combine(basis, s_minus, d));
  return out / (2.0 * d);
}

GeometricDiscord geometric_discord(const DensityMatrix& rho) {
  const auto decomp = bloch_decompose(rho);
  const int d = decomp.d;
  const Eigen::Matrix3d gram =
      decomp.x * decomp.x.transpose() + decomp.T * decomp.T.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(gram);
  const auto& values = solver.eigenvalues();  // ascending
  const double k_max = values(2);

  int top = 1;
  const double tie = 1e-10 * std::max(1.0, std::abs(k_max));
  while (top < 3 && values(2 - top) >= k_max - tie) ++top;
  const Eigen::MatrixXd span = solver.eigenvectors().rightCols(top);
  const Eigen::Vector3d e = lexicographic_max(span);

  GeometricDiscord out;
  out.k_max = k_max;
  out.e = e;
  out.value = std::max(
      0.0, (decomp.x.squaredNorm() + decomp.T.squaredNorm() - k_max) / (2.0 * d));

  auto& chi = out.nearest;
  chi.t = decomp.x.dot(e);
  chi.e = e;
  chi.s_plus = decomp.y;
  chi.s_minus = decomp.T.transpose() * e;
  chi.chi = classical_state_matrix(d, chi.t, e, chi.s_plus, chi.s_minus);
  chi.psd = hermitian_eigenvalues(chi.chi).back() >= -1e-10;
  return out;
}

double geometric_discord_x_compact(const DensityMatrix& rho, double tol) {
  if (!rho.is_qubit_qudit() || rho.dim_b() != 2) {
    throw Error(ErrorCode::NotTwoQubit, "compact formula is for two qubits");
  }
  if (!has_x_pattern(rho.matrix(), tol)) {
    throw Error(ErrorCode::NotXState, "compact formula needs an X state");
  }
  const auto decomp = bloch_decompose(rho);
  const double a00 = decomp.T(0, 0);
  const double a01 = decomp.T(0, 1);
  const double a10 = decomp.T(1, 0);
  const double a11 = decomp.T(1, 1);
  const double d10 = decomp.x(2);
  const double d11 = decomp.T(2, 2);

  const double a_norm_sq = a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11;
  const double a_sq = 2.0 * (a00 * a11 - a01 * a10);
  const double lambda0 = d10 * d10 + d11 * d11;
  double radicand = a_norm_sq * a_norm_sq - a_sq * a_sq;
  if (radicand < -1e-12 * std::max(1.0, a_norm_sq * a_norm_sq)) {
    throw Error(ErrorCode::NumericalInput,
                "negative radicand " + std::to_string(radicand));
  }
  radicand = std::max(0.0, radicand);
  return 0.25 * std::min(a_norm_sq,
                         0.5 * a_norm_sq + lambda0 - 0.5 * std::sqrt(radicand));
}

double oracle_min_over_classical(const DensityMatrix& rho,
                                 const OracleOptions& options) {
  const auto decomp = bloch_decompose(rho);
  const int d = decomp.d;
  const auto basis = operator_basis(d);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix id_d = ComplexMatrix::Identity(d, d);
  const ComplexMatrix local_b = kron(id2, combine(basis, decomp.y, d));

  // Distance from rho to the best classical state with measurement axis e:
  // t, s_plus and s_minus take their stationary values, the state itself is
  // assembled and compared entrywise.
  auto distance = [&](const opt::Point2& angles) {
    const Eigen::Vector3d e(std::sin(angles[0]) * std::cos(angles[1]),
                            std::sin(angles[0]) * std::sin(angles[1]),
                            std::cos(angles[0]));
    const double t = decomp.x.dot(e);
    const Eigen::VectorXd s_minus = decomp.T.transpose() * e;
    const ComplexMatrix e_sigma = pauli_combination(e);
    ComplexMatrix chi = kron(id2 + t * e_sigma, id_d) + local_b +
                        kron(e_sigma, combine(basis, s_minus, d));
    chi /= 2.0 * d;
    return hs_norm_sq(rho.matrix() - chi);
  };

  std::vector<std::pair<double, opt::Point2>> seeds;
  double best = distance({0.0, 0.0});
  for (int i = 0; i <= options.grid_theta; ++i) {
    const double theta = 0.5 * std::numbers::pi * i / options.grid_theta;
    for (int j = 0; j < options.grid_phi; ++j) {
      const opt::Point2 p{theta, kTwoPi * j / options.grid_phi};
      const double v = distance(p);
      best = std::min(best, v);
      seeds.emplace_back(v, p);
    }
  }
  std::partial_sort(seeds.begin(), seeds.begin() + 4, seeds.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
  seeds.resize(4);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  for (int r = 0; r < options.restarts; ++r) {
    const Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
    const Eigen::Vector3d e = v.normalized();
    seeds.emplace_back(0.0, opt::Point2{std::acos(std::clamp(e(2), -1.0, 1.0)),
                                        std::atan2(e(1), e(0))});
  }

  opt::SimplexOptions simplex;
  simplex.initial_step = 0.1;
  simplex.f_tol = 1e-14;
  simplex.x_tol = 1e-9;
  for (const auto& seed : seeds) {
    best = std::min(best, opt::nelder_mead(distance, seed.second, simplex).value);
  }
  return best;
}

}  // namespace qdiscord
