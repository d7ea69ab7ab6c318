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

#include "qdiscord/entropic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "qdiscord/minimize.hpp"
#include "qdiscord/xblocks.hpp"

namespace qdiscord {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieTol = 1e-10;
constexpr double kZeroProbability = 1e-14;

constexpr int kThetaOnlyGrid = 65;
constexpr int kFullThetaGrid = 64;
constexpr int kFullPhiGrid = 64;
constexpr int kFullPolishStarts = 4;

void require_bipartite(const DensityMatrix& rho) {
  if (!rho.is_qubit_qudit()) {
    throw Error(ErrorCode::DimensionMismatch,
                "entropic discord needs a 2 (x) d state");
  }
}

// Conditional entropy as a function of the angles, with the blocks of rho
// unpacked once. For extended-X input the conditional state is X, so only
// its diagonal and anti-diagonal are formed.
class ConditionalEntropy {
 public:
  explicit ConditionalEntropy(const DensityMatrix& rho)
      : d_(rho.dim_b()),
        top_left_(rho.block(0, 0)),
        top_right_(rho.block(0, 1)),
        bottom_right_(rho.block(1, 1)),
        x_structured_(has_extended_x_pattern(rho.matrix(),
                                             kDefaultStructureTol)) {
    values_.reserve(static_cast<std::size_t>(d_));
  }

  bool x_structured() const { return x_structured_; }

  double operator()(double theta, double phi) {
    ++evaluations_;
    const double cos_t = std::cos(theta);
    const double half_sin_t = 0.5 * std::sin(theta);
    const Complex phase = std::polar(1.0, phi);
    return branch(0.5 * (1.0 + cos_t), 0.5 * (1.0 - cos_t),
                  half_sin_t * phase) +
           branch(0.5 * (1.0 - cos_t), 0.5 * (1.0 + cos_t),
                  -half_sin_t * phase);
  }

  int evaluations() const { return evaluations_; }

 private:
  // p S(M/p) for M = wa TL + wb BR + w TR + conj(w) TR^dagger.
  double branch(double wa, double wb, Complex w) {
    values_.clear();
    double p = 0.0;
    if (x_structured_) {
      for (int r = 0; r < d_ / 2; ++r) {
        const int s = d_ - 1 - r;
        const double a = entry(r, r, wa, wb, w).real();
        const double b = entry(s, s, wa, wb, w).real();
        const Complex c = entry(r, s, wa, wb, w);
        auto [hi, lo] = hermitian_eigenvalues_2x2(a, b, c);
        values_.push_back(hi);
        values_.push_back(lo);
        p += a + b;
      }
      if (d_ % 2 == 1) {
        const int m = d_ / 2;
        const double a = entry(m, m, wa, wb, w).real();
        values_.push_back(a);
        p += a;
      }
    } else {
      scratch_ = wa * top_left_ + wb * bottom_right_ + w * top_right_ +
                 std::conj(w) * top_right_.adjoint();
      p = scratch_.trace().real();
      if (p > kZeroProbability) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
            scratch_, Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
          values_.push_back(solver.eigenvalues()(i));
        }
      }
    }
    if (p <= kZeroProbability) return 0.0;
    // p S(M/p) = -sum mu log2(mu/p); rounding-level negatives are dropped.
    double s = 0.0;
    for (double mu : values_) {
      if (mu > 0.0) s -= mu * std::log2(mu / p);
    }
    return s;
  }

  Complex entry(int i, int j, double wa, double wb, Complex w) const {
    return wa * top_left_(i, j) + wb * bottom_right_(i, j) +
           w * top_right_(i, j) + std::conj(w) * std::conj(top_right_(j, i));
  }

  int d_;
  ComplexMatrix top_left_;
  ComplexMatrix top_right_;
  ComplexMatrix bottom_right_;
  bool x_structured_;
  ComplexMatrix scratch_;
  std::vector<double> values_;
  int evaluations_ = 0;
};

struct Trial {
  MeasurementAngles angles;
  double value;
};

// Minimum value, reported at the lexicographically smallest (theta, phi)
// whose value is within kTieTol of it.
Trial select_best(const std::vector<Trial>& trials) {
  double best = trials.front().value;
  for (const auto& t : trials) best = std::min(best, t.value);
  const Trial* chosen = nullptr;
  for (const auto& t : trials) {
    if (t.value > best + kTieTol) continue;
    if (chosen == nullptr ||
        std::tie(t.angles.theta, t.angles.phi) <
            std::tie(chosen->angles.theta, chosen->angles.phi)) {
      chosen = &t;
    }
  }
  return {chosen->angles, best};
}

const std::array<MeasurementAngles, 4>& candidate_angles() {
  static const std::array<MeasurementAngles, 4> kCandidates{{
      {0.0, 0.0},
      {kHalfPi, 0.0},
      {kHalfPi, kHalfPi},
      {kHalfPi, kPi},
  }};
  return kCandidates;
}

void run_theta_only(ConditionalEntropy& f, std::vector<Trial>& trials) {
  std::vector<double> grid(kThetaOnlyGrid);
  std::size_t best = 0;
  for (int i = 0; i < kThetaOnlyGrid; ++i) {
    const double theta = kHalfPi * (double(i) / (kThetaOnlyGrid - 1));
    grid[static_cast<std::size_t>(i)] = f(theta, 0.0);
    trials.push_back({{theta, 0.0}, grid[static_cast<std::size_t>(i)]});
    if (grid[static_cast<std::size_t>(i)] < grid[best]) {
      best = static_cast<std::size_t>(i);
    }
  }
  const double step = kHalfPi / (kThetaOnlyGrid - 1);
  const double lo = std::max(0.0, (double(best) - 1.0) * step);
  const double hi = std::min(kHalfPi, (double(best) + 1.0) * step);
  const auto refined =
      opt::golden_section([&](double theta) { return f(theta, 0.0); }, lo, hi);
  trials.push_back({{refined.x, 0.0}, refined.value});
}

void run_full(ConditionalEntropy& f, std::vector<Trial>& trials) {
  // values[i][j] on theta_i = (pi/2) i/63, phi_j = 2 pi j/64; the pole row is
  // a single point.
  std::vector<std::vector<double>> values(
      kFullThetaGrid, std::vector<double>(kFullPhiGrid));
  const double pole = f(0.0, 0.0);
  trials.push_back({{0.0, 0.0}, pole});
  std::fill(values[0].begin(), values[0].end(), pole);
  for (int i = 1; i < kFullThetaGrid; ++i) {
    const double theta = kHalfPi * (double(i) / (kFullThetaGrid - 1));
    for (int j = 0; j < kFullPhiGrid; ++j) {
      const double phi = kTwoPi * (double(j) / kFullPhiGrid);
      values[i][j] = f(theta, phi);
      trials.push_back({{theta, phi}, values[i][j]});
    }
  }

  // Polish from the lowest grid-local minima. Cells at the equator compare
  // against their parity images, which sit in the same row shifted by pi.
  std::vector<std::tuple<double, int, int>> starts;
  auto at = [&](int i, int j) {
    j = ((j % kFullPhiGrid) + kFullPhiGrid) % kFullPhiGrid;
    if (i >= kFullThetaGrid) {
      i = 2 * (kFullThetaGrid - 1) - i;
      j = (j + kFullPhiGrid / 2) % kFullPhiGrid;
    }
    return values[i][j];
  };
  for (int i = 0; i < kFullThetaGrid; ++i) {
    for (int j = 0; j < (i == 0 ? 1 : kFullPhiGrid); ++j) {
      const double v = values[i][j];
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di) {
        for (int dj = -1; dj <= 1 && local_min; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ni = i + di;
          if (ni < 0) continue;
          if (at(ni, j + dj) < v) local_min = false;
        }
      }
      if (local_min) starts.emplace_back(v, i, j);
    }
  }
  std::sort(starts.begin(), starts.end());
  if (starts.size() > static_cast<std::size_t>(kFullPolishStarts)) {
    starts.resize(kFullPolishStarts);
  }
  if (starts.empty()) starts.emplace_back(pole, 0, 0);

  opt::SimplexOptions options;
  options.initial_step = 0.5 * kHalfPi / (kFullThetaGrid - 1);
  for (const auto& [value, i, j] : starts) {
    const opt::Point2 start{kHalfPi * (double(i) / (kFullThetaGrid - 1)),
                            kTwoPi * (double(j) / kFullPhiGrid)};
    const auto polished = opt::nelder_mead(
        [&](const opt::Point2& p) { return f(p[0], p[1]); }, start, options);
    trials.push_back(
        {canonicalize({polished.x[0], polished.x[1]}), polished.value});
  }
}

double entropy_of_marginal_b(const DensityMatrix& rho) {
  const auto rho_b = partial_trace(rho, Subsystem::A);
  if (has_x_pattern(rho_b.matrix(), kDefaultStructureTol)) {
    std::vector<double> values;
    append_eigenvalues_x_unchecked(rho_b.matrix(), values);
    return entropy_bits(values);
  }
  return von_neumann_entropy(rho_b);
}

}  // namespace

MeasurementAngles MeasurementAngles::parity_partner() const {
  return {kPi - theta, kPi + phi};
}

std::array<double, 3> MeasurementAngles::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

MeasurementAngles canonicalize(const MeasurementAngles& angles) {
  auto z = angles.direction();
  if (z[2] < 0.0) {
    for (double& c : z) c = -c;
  }
  const double rho = std::hypot(z[0], z[1]);
  MeasurementAngles out{std::atan2(rho, z[2]), std::atan2(z[1], z[0])};
  if (out.phi < 0.0) out.phi += kTwoPi;
  if (out.phi >= kTwoPi) out.phi -= kTwoPi;
  if (out.theta < 1e-12) out.phi = 0.0;
  return out;
}

std::string_view to_string(OptimizationMode mode) {
  switch (mode) {
    case OptimizationMode::Candidate: return "candidate";
    case OptimizationMode::ThetaOnly: return "theta";
    case OptimizationMode::Full: return "full";
  }
  return "full";
}

OptimizationMode optimization_mode_from_string(std::string_view text) {
  if (text == "candidate") return OptimizationMode::Candidate;
  if (text == "theta" || text == "theta-only") return OptimizationMode::ThetaOnly;
  if (text == "full") return OptimizationMode::Full;
  throw Error(ErrorCode::BadSpec,
              "unknown optimization mode '" + std::string(text) + "'");
}

std::array<double, 3> z_vector(double t, const std::array<double, 3>& y) {
  const double norm = t * t + y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
  if (std::abs(norm - 1.0) > 1e-10) {
    throw Error(ErrorCode::ConstraintViolated,
                "t^2 + |y|^2 = " + std::to_string(norm));
  }
  return {2.0 * (-t * y[1] + y[0] * y[2]), 2.0 * (t * y[0] + y[1] * y[2]),
          t * t + y[2] * y[2] - y[0] * y[0] - y[1] * y[1]};
}

ComplexMatrix measurement_projector(const MeasurementAngles& angles,
                                    MeasurementSign sign) {
  const auto a = sign == MeasurementSign::Plus ? angles : angles.parity_partner();
  const double c = std::cos(0.5 * a.theta);
  const double s = std::sin(0.5 * a.theta);
  const double half_sin = 0.5 * std::sin(a.theta);
  ComplexMatrix m(2, 2);
  m(0, 0) = c * c;
  m(0, 1) = half_sin * std::polar(1.0, -a.phi);
  m(1, 0) = half_sin * std::polar(1.0, a.phi);
  m(1, 1) = s * s;
  return m;
}

ConditionalState conditional_state(const DensityMatrix& rho,
                                   const MeasurementAngles& angles,
                                   MeasurementSign sign) {
  require_bipartite(rho);
  const auto proj = measurement_projector(angles, sign);
  // tr_A[(P (x) I) rho (P (x) I)] = sum_ij P_ji rho_ij for a projector P.
  ComplexMatrix m = proj(0, 0) * rho.block(0, 0) + proj(1, 0) * rho.block(0, 1) +
                    proj(1, 1) * rho.block(1, 1) + proj(0, 1) * rho.block(1, 0);
  ConditionalState out;
  out.probability = m.trace().real();
  if (out.probability > kZeroProbability) {
    out.state = m / out.probability;
  } else {
    out.probability = 0.0;
    out.state = ComplexMatrix::Zero(m.rows(), m.cols());
  }
  return out;
}

double conditional_entropy(const DensityMatrix& rho,
                           const MeasurementAngles& angles) {
  require_bipartite(rho);
  ConditionalEntropy f(rho);
  return f(angles.theta, angles.phi);
}

bool phi_independence_check(const DensityMatrix& rho, double tol) {
  if (!rho.is_qubit_qudit() || !has_extended_x_pattern(rho.matrix(), tol)) {
    throw Error(ErrorCode::NotExtendedX,
                "phi independence is only decided for extended-X states");
  }
  // Look for integer labels n_k with n_l - n_k = 1 on every coupling of the
  // off-diagonal block and n_l = n_k on every diagonal-block coupling. Then
  // V = diag(e^{i phi n_k}) maps the phi-rotated conditional state back to
  // phi = 0 without changing its spectrum.
  const int d = rho.dim_b();
  const auto tl = rho.block(0, 0);
  const auto tr = rho.block(0, 1);
  const auto br = rho.block(1, 1);
  std::vector<std::vector<std::pair<int, int>>> edges(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      if (std::abs(tr(k, l)) > tol) {
        if (k == l) return false;
        edges[static_cast<std::size_t>(k)].emplace_back(l, 1);
        edges[static_cast<std::size_t>(l)].emplace_back(k, -1);
      }
      if (k != l && (std::abs(tl(k, l)) > tol || std::abs(br(k, l)) > tol)) {
        edges[static_cast<std::size_t>(k)].emplace_back(l, 0);
        edges[static_cast<std::size_t>(l)].emplace_back(k, 0);
      }
    }
  }
  std::vector<std::optional<int>> label(static_cast<std::size_t>(d));
  for (int root = 0; root < d; ++root) {
    if (label[static_cast<std::size_t>(root)]) continue;
    label[static_cast<std::size_t>(root)] = 0;
    std::queue<int> pending;
    pending.push(root);
    while (!pending.empty()) {
      const int k = pending.front();
      pending.pop();
      const int nk = *label[static_cast<std::size_t>(k)];
      for (const auto& [l, offset] : edges[static_cast<std::size_t>(k)]) {
        auto& nl = label[static_cast<std::size_t>(l)];
        if (!nl) {
          nl = nk + offset;
          pending.push(l);
        } else if (*nl != nk + offset) {
          return false;
        }
      }
    }
  }
  return true;
}

CorrelationResult classical_correlation(const DensityMatrix& rho,
                                        OptimizationMode mode) {
  require_bipartite(rho);
  ConditionalEntropy f(rho);
  std::vector<Trial> trials;

  double candidate_best = 0.0;
  bool first = true;
  for (const auto& a : candidate_angles()) {
    const double v = f(a.theta, a.phi);
    candidate_best = first ? v : std::min(candidate_best, v);
    first = false;
    if (mode == OptimizationMode::Candidate) trials.push_back({a, v});
  }
  if (mode == OptimizationMode::ThetaOnly) run_theta_only(f, trials);
  if (mode == OptimizationMode::Full) run_full(f, trials);

  const Trial best = select_best(trials);
  CorrelationResult out;
  out.min_conditional_entropy = best.value;
  out.optimal = best.angles;
  out.classical_correlation = entropy_of_marginal_b(rho) - best.value;
  out.candidate_conditional_entropy = candidate_best;
  out.evaluations = f.evaluations();
  return out;
}

double mutual_information(const DensityMatrix& rho) {
  require_bipartite(rho);
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const double s_b = entropy_of_marginal_b(rho);
  double s_ab = 0.0;
  if (has_extended_x_pattern(rho.matrix(), kDefaultStructureTol)) {
    s_ab = entropy_bits(eigenvalues_extended_x_unchecked(rho.matrix()));
  } else {
    s_ab = von_neumann_entropy(rho);
  }
  return s_a + s_b - s_ab;
}

DiscordResult entropic_discord(const DensityMatrix& rho,
                               const DiscordOptions& options) {
  require_bipartite(rho);
  OptimizationMode mode = options.mode;
  if (mode == OptimizationMode::Candidate && options.escalate &&
      has_extended_x_pattern(rho.matrix(), kDefaultStructureTol) &&
      phi_independence_check(rho)) {
    mode = OptimizationMode::ThetaOnly;
  }
  const auto corr = classical_correlation(rho, mode);
  DiscordResult out;
  out.mode = mode;
  out.mutual_information = mutual_information(rho);
  out.classical_correlation = corr.classical_correlation;
  out.discord = out.mutual_information - out.classical_correlation;
  out.optimal_angles = corr.optimal;
  if (mode == OptimizationMode::Full) {
    out.candidate_gap = std::max(
        0.0, corr.candidate_conditional_entropy - corr.min_conditional_entropy);
  }
  return out;
}

}  // namespace qdiscord
