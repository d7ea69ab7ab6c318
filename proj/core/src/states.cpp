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

#include "qdiscord/states.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <string>

namespace qdiscord {

std::string_view to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::General: return "General";
    case StructureTag::X: return "X";
    case StructureTag::ExtendedX: return "ExtendedX";
  }
  return "General";
}

bool has_x_pattern(const ComplexMatrix& m, double tol) {
  const auto n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i || j == n - 1 - i) continue;
      if (std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

bool has_extended_x_pattern(const ComplexMatrix& m, double tol) {
  const auto n = m.rows();
  if (n % 2 != 0) return false;
  const auto d = n / 2;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto r = i % d;
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto c = j % d;
      if (c == r || c == d - 1 - r) continue;
      if (std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

StructureClass classify_structure(const DensityMatrix& rho, double tol) {
  StructureClass out{StructureTag::General, tol};
  if (has_x_pattern(rho.matrix(), tol)) {
    out.tag = StructureTag::X;
  } else if (rho.is_qubit_qudit() &&
             has_extended_x_pattern(rho.matrix(), tol)) {
    out.tag = StructureTag::ExtendedX;
  }
  return out;
}

int parameter_count(StructureTag tag, int d) {
  if (d < 2) {
    throw Error(ErrorCode::DimensionMismatch, "parameter_count needs d >= 2");
  }
  switch (tag) {
    case StructureTag::X:
      return 4 * d - 1;
    case StructureTag::ExtendedX:
      return d % 2 == 0 ? 8 * d - 1 : 8 * d - 5;
    case StructureTag::General:
      break;
  }
  throw Error(ErrorCode::UnsupportedTag,
              "parameter_count is defined for X and ExtendedX only");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

DensityMatrix sample_hs_random(int dim, std::uint64_t seed) {
  if (dim < 2) {
    throw Error(ErrorCode::DimensionMismatch, "sample_hs_random needs dim >= 2");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Remove the rounding asymmetry of the product.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const bool bipartite = dim % 2 == 0;
  return DensityMatrix::from_trusted(std::move(rho), bipartite ? 2 : 1,
                                     bipartite ? dim / 2 : dim);
}

DensityMatrix project_to_x(const DensityMatrix& rho) {
  const auto n = rho.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    out(i, i) = rho(i, i);
    out(i, n - 1 - i) = rho(i, n - 1 - i);
  }
  return DensityMatrix::from_trusted(std::move(out), rho.dim_a(), rho.dim_b());
}

namespace states {
namespace {

DensityMatrix pure_bipartite(const Eigen::VectorXcd& psi) {
  const auto n = static_cast<int>(psi.size());
  ComplexMatrix rho = psi * psi.adjoint();
  return DensityMatrix::from_trusted(std::move(rho), 2, n / 2);
}

template <typename T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorCode::BadSpec, "cannot parse number in '" +
                                        std::string(spec) + "'");
  }
  return value;
}

}  // namespace

DensityMatrix bell(int k) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  switch (k) {
    case 1: psi(0) = h; psi(3) = h; break;
    case 2: psi(0) = h; psi(3) = -h; break;
    case 3: psi(1) = h; psi(2) = h; break;
    case 4: psi(1) = h; psi(2) = -h; break;
    default:
      throw Error(ErrorCode::BadSpec, "bell index must be 1..4");
  }
  return pure_bipartite(psi);
}

DensityMatrix werner(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw Error(ErrorCode::BadSpec, "werner weight must lie in [0, 1]");
  }
  ComplexMatrix rho = z * bell(4).matrix() +
                      (1.0 - z) * ComplexMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix::from_trusted(std::move(rho), 2, 2);
}

DensityMatrix ghz(int n) {
  if (n < 2 || n > 16) throw Error(ErrorCode::BadSpec, "ghz needs 2..16 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = psi(dim - 1) = 1.0 / std::sqrt(2.0);
  return pure_bipartite(psi);
}

DensityMatrix w(int n) {
  if (n < 2 || n > 16) throw Error(ErrorCode::BadSpec, "w needs 2..16 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  for (int q = 0; q < n; ++q) psi(Eigen::Index{1} << q) = 1.0 / std::sqrt(n);
  return pure_bipartite(psi);
}

DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  if (rho_a.dim() != 2) {
    throw Error(ErrorCode::BadSpec, "product needs a qubit first factor");
  }
  return DensityMatrix::from_trusted(kron(rho_a.matrix(), rho_b.matrix()), 2,
                                     rho_b.dim());
}

DensityMatrix maximally_mixed(int dim) {
  if (dim < 1) throw Error(ErrorCode::BadSpec, "mixed needs dim >= 1");
  ComplexMatrix rho = ComplexMatrix::Identity(dim, dim) / double(dim);
  const bool bipartite = dim % 2 == 0 && dim >= 4;
  return DensityMatrix::from_trusted(std::move(rho), bipartite ? 2 : 1,
                                     bipartite ? dim / 2 : dim);
}

DensityMatrix classical_quantum(double p, const DensityMatrix& rho1,
                                const DensityMatrix& rho2) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::BadSpec, "classical_quantum weight outside [0, 1]");
  }
  if (rho1.dim() != rho2.dim()) {
    throw Error(ErrorCode::BadSpec, "classical_quantum branches differ in dim");
  }
  const int d = rho1.dim();
  ComplexMatrix rho = ComplexMatrix::Zero(2 * d, 2 * d);
  rho.topLeftCorner(d, d) = p * rho1.matrix();
  rho.bottomRightCorner(d, d) = (1.0 - p) * rho2.matrix();
  return DensityMatrix::from_trusted(std::move(rho), 2, d);
}

DensityMatrix from_name(std::string_view spec) {
  if (spec.size() == 5 && spec.substr(0, 4) == "bell") {
    return bell(spec[4] - '0');
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::BadSpec, "unknown state '" + std::string(spec) + "'");
  }
  const auto head = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (head == "werner") return werner(parse_number<double>(arg, spec));
  if (head == "ghz") return ghz(parse_number<int>(arg, spec));
  if (head == "w") return w(parse_number<int>(arg, spec));
  if (head == "mixed") return maximally_mixed(parse_number<int>(arg, spec));
  throw Error(ErrorCode::BadSpec, "unknown state '" + std::string(spec) + "'");
}

}  // namespace states
}  // namespace qdiscord
