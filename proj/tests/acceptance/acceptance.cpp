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

// Acceptance driver. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cstdio>
#include <numbers>
#include <thread>

#include "cli_commands.hpp"
#include "qdiscord/entropic.hpp"
#include "qdiscord/geometric.hpp"
#include "qdiscord/xblocks.hpp"
#include "test_util.hpp"

using namespace qdiscord;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d %-34s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

MeasurementAngles random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1.0 - 2.0 * u(rng)), 2.0 * kPi * u(rng)};
}

DensityMatrix rotate_locally(const DensityMatrix& rho, std::mt19937_64& rng) {
  const int d = rho.dim_b();
  const ComplexMatrix u = kron(fixtures::random_unitary(2, rng), fixtures::random_unitary(d, rng));
  const ComplexMatrix r = u * rho.matrix() * u.adjoint();
  return DensityMatrix::validate(0.5 * (r + r.adjoint()), d);
}

DensityMatrix real_coherences(const DensityMatrix& rho) {
  ComplexMatrix m = rho.matrix();
  const int dim = static_cast<int>(m.rows());
  if (dim == 4) {
    const double a = std::arg(m(0, 3));
    const double b = std::arg(m(1, 2));
    ComplexMatrix ua = ComplexMatrix::Identity(2, 2);
    ComplexMatrix ub = ComplexMatrix::Identity(2, 2);
    ua(1, 1) = std::polar(1.0, (a + b) / 2);
    ub(1, 1) = std::polar(1.0, (a - b) / 2);
    const ComplexMatrix u = kron(ua, ub);
    m = u * m * u.adjoint();
  } else {
    m = m.cwiseAbs().cast<Complex>();
  }
  return DensityMatrix::validate(0.5 * (m + m.adjoint()), dim / 2);
}

void fig1_statistic(int id, int qubits, double threshold) {
  cli::CampaignOptions opt;
  opt.n = 10000;
  opt.qubits = qubits;
  opt.seed = 20240601;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto start = std::chrono::steady_clock::now();
  const auto records = cli::run_campaign(opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto s = cli::campaign_summary(records, opt);
  const double gap = s["fraction_candidate_gap_within_tol"].get<double>();
  std::printf("     info %d-qubit: theta at pole/equator %.4f, flagged %.4f, max gap %.3g, %.1fs\n",
              qubits, s["fraction_theta_at_pole_or_equator"].get<double>(),
              s["fraction_at_pole_or_equator"].get<double>(),
              s["max_candidate_gap"].get<double>(), seconds);
  // Same seeds with real coherences. For two qubits this is a local
  // diagonal unitary (discord unchanged); for three it is a different state.
  const int n_real = 2000;
  int real_ok = 0;
  for (int i = 0; i < n_real; ++i) {
    const auto rho = project_to_x(sample_hs_random(1 << qubits, derive_seed(opt.seed, i)));
    real_ok += *entropic_discord(real_coherences(rho)).candidate_gap <= opt.value_tol;
  }
  std::printf("     info %d-qubit: real-coherence X states, gap<=1e-6 fraction %.4f (n=%d)\n",
              qubits, double(real_ok) / n_real, n_real);
  report(id, qubits == 2 ? "candidate angles, two qubits" : "candidate angles, three qubits",
         gap >= threshold, fmt("gap<=1e-6 fraction %.4f (need >= %.3f)", gap, threshold));
}

void prescription_equivalence() {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  double worst_total = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + i % 3;
    const auto rho = fixtures::random_extended_x(d, rng);
    const auto a = random_angles(rng);
    double total = 0.0;
    for (auto sign : {MeasurementSign::Plus, MeasurementSign::Minus}) {
      const auto c = conditional_state(rho, a, sign);
      const auto literal =
          fixtures::measured_marginal(rho.matrix(), measurement_projector(a, sign), d);
      worst = std::max(worst, max_abs(c.probability * c.state - literal));
      total += c.probability;
    }
    worst_total = std::max(worst_total, std::abs(total - 1.0));
  }
  report(3, "clockwise-block prescription", worst <= 1e-12 && worst_total <= 1e-12,
         fmt("max entry error %.2e, max |p+ + p- - 1| %.2e", worst, worst_total));
}

void structured_eigensolver() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int d = 2 + i % 15;
    const auto rho = fixtures::random_extended_x(d, rng);
    auto fast = eigenvalues_extended_x(rho);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    std::vector<double> dense(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(fast.begin(), fast.end());
    std::sort(dense.begin(), dense.end());
    if (fast.size() != dense.size()) {
      worst = 1e300;
      continue;
    }
    for (std::size_t k = 0; k < fast.size(); ++k) {
      worst = std::max(worst, std::abs(fast[k] - dense[k]));
    }
  }
  report(4, "extended-X eigenvalues, d <= 16", worst <= 1e-10,
         fmt("max eigenvalue error %.2e", worst));
}

void geometric_oracle() {
  std::mt19937_64 rng(5);
  int agree = 0;
  double worst_excess = -1e300;
  for (int i = 0; i < 200; ++i) {
    const int d = 2 + i % 2;
    const auto rho = fixtures::random_state(d, rng);
    const double closed = geometric_discord(rho).value;
    const double oracle = oracle_min_over_classical(rho);
    worst_excess = std::max(worst_excess, closed - oracle);
    agree += std::abs(closed - oracle) <= 1e-6;
  }
  const double frac = agree / 200.0;
  report(5, "geometric closed form vs oracle", worst_excess <= 1e-9 && frac >= 0.95,
         fmt("max(closed - oracle) %.2e, agreement %.3f", worst_excess, frac));
}

void compact_formula() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  double worst_prefactor = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto rho = fixtures::random_x(4, rng);
    const auto g = geometric_discord(rho);
    worst = std::max(worst, std::abs(geometric_discord_x_compact(rho) - g.value));
    const auto dec = bloch_decompose(rho);
    const double quarter = 0.25 * (dec.x.squaredNorm() + dec.T.squaredNorm() - g.k_max);
    worst_prefactor = std::max(worst_prefactor, std::abs(std::max(0.0, quarter) - g.value));
  }
  report(6, "compact two-qubit X formula", worst <= 1e-12 && worst_prefactor <= 1e-15,
         fmt("max difference %.2e, prefactor residual %.2e", worst, worst_prefactor));
}

void zero_discord_class() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_e = 0.0;
  double worst_g = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 3;
    const auto b1 = DensityMatrix::from_trusted(fixtures::random_density(d, rng), 1, d);
    const auto b2 = DensityMatrix::from_trusted(fixtures::random_density(d, rng), 1, d);
    const auto rho = rotate_locally(states::classical_quantum(u(rng), b1, b2), rng);
    worst_e = std::max(worst_e, entropic_discord(rho).discord);
    worst_g = std::max(worst_g, geometric_discord(rho).value);
  }
  double least = 1e300;
  for (int step = 0; step <= 12; ++step) {
    const auto rho = states::werner(0.4 + 0.05 * step);
    least = std::min({least, entropic_discord(rho).discord, geometric_discord(rho).value});
  }
  report(7, "zero-discord class and werner",
         worst_e <= 1e-6 && worst_g <= 1e-6 && least >= 0.01,
         fmt("cq max entropic %.2e geometric %.2e, werner(z>=0.4) min %.4f", worst_e, worst_g,
             least));
}

void known_values() {
  double worst_e = 0.0;
  double worst_g = 0.0;
  for (int k = 1; k <= 4; ++k) {
    worst_e = std::max(worst_e, std::abs(entropic_discord(states::bell(k)).discord - 1.0));
    worst_g = std::max(worst_g, std::abs(geometric_discord(states::bell(k)).value - 0.5));
  }
  double worst_w = 0.0;
  for (double z : {0.25, 0.5, 1.0}) {
    worst_w = std::max(worst_w, std::abs(geometric_discord(states::werner(z)).value - z * z / 2));
  }
  report(8, "known values", worst_e <= 1e-6 && worst_g <= 1e-9 && worst_w <= 1e-9,
         fmt("bell entropic %.2e, bell geometric %.2e, werner %.2e", worst_e, worst_g, worst_w));
}

void parameter_counts() {
  bool ok = parameter_count(StructureTag::X, 2) == 7 &&
            parameter_count(StructureTag::ExtendedX, 2) == 15 &&
            parameter_count(StructureTag::ExtendedX, 3) == 19 &&
            parameter_count(StructureTag::ExtendedX, 4) == 31;
  for (int n = 2; n <= 6; ++n) {
    ok = ok && parameter_count(StructureTag::ExtendedX, 1 << (n - 1)) == (1 << (n + 2)) - 1;
  }
  report(9, "parameter counts", ok, "7 15 19 31, 2^(N+2)-1 for N=2..6");
}

void invariance_suite() {
  std::mt19937_64 rng(10);
  double worst_e = 0.0;
  double worst_g = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 2;
    const auto rho = fixtures::random_state(d, rng);
    const auto moved = rotate_locally(rho, rng);
    worst_e = std::max(worst_e,
                       std::abs(entropic_discord(rho).discord - entropic_discord(moved).discord));
    worst_g = std::max(worst_g,
                       std::abs(geometric_discord(rho).value - geometric_discord(moved).value));
  }
  double worst_parity = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 3;
    const auto rho = i % 2 ? fixtures::random_extended_x(d, rng) : fixtures::random_state(d, rng);
    const auto a = random_angles(rng);
    worst_parity = std::max(worst_parity, std::abs(conditional_entropy(rho, a) -
                                                   conditional_entropy(rho, a.parity_partner())));
  }
  double worst_identity = 0.0;
  std::normal_distribution<double> normal;
  for (int i = 0; i < 1000; ++i) {
    double q[4] = {normal(rng), normal(rng), normal(rng), normal(rng)};
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (double& c : q) c /= n;
    const auto z = z_vector(q[0], {q[1], q[2], q[3]});
    const MeasurementAngles a{std::acos(std::clamp(z[2], -1.0, 1.0)), std::atan2(z[1], z[0])};
    const double v[3] = {normal(rng), normal(rng), normal(rng)};
    const ComplexMatrix sv = v[0] * pauli_x() + v[1] * pauli_y() + v[2] * pauli_z();
    const double zv = z[0] * v[0] + z[1] * v[1] + z[2] * v[2];
    const auto plus = measurement_projector(a, MeasurementSign::Plus);
    const auto minus = measurement_projector(a, MeasurementSign::Minus);
    worst_identity = std::max({worst_identity, max_abs(plus * sv * plus - zv * plus),
                               max_abs(minus * sv * minus + zv * minus)});
  }
  report(10, "invariance suite",
         worst_e <= 1e-6 && worst_g <= 1e-9 && worst_parity <= 1e-12 && worst_identity <= 1e-12,
         fmt("LU entropic %.2e geometric %.2e, parity %.2e, projector identity %.2e", worst_e,
             worst_g, worst_parity, worst_identity));
}

void run_all() {
  fig1_statistic(1, 2, 0.99);
  fig1_statistic(2, 3, 0.985);
  prescription_equivalence();
  structured_eigensolver();
  geometric_oracle();
  compact_formula();
  zero_discord_class();
  known_values();
  parameter_counts();
  invariance_suite();
}

}  // namespace

int main() {
  try {
    run_all();
  } catch (const std::exception& e) {
    std::printf("FAIL aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
