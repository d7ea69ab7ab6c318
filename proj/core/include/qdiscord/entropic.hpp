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

// Entropic discord of 2 (x) d states with projective measurements on the
// qubit. The measurement direction z is parametrized by polar angles; the
// conditional state on B is the sum of the four d x d blocks of rho weighted
// by the matching entries of the projector, so no 2d x 2d products are
// formed.

#include <array>
#include <optional>
#include <string_view>

#include "qdiscord/density_matrix.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

struct MeasurementAngles {
  double theta = 0.0;
  double phi = 0.0;

  /// (pi - theta, pi + phi), the antipodal direction.
  MeasurementAngles parity_partner() const;
  std::array<double, 3> direction() const;
};

/// Maps an arbitrary direction into theta in [0, pi/2], phi in [0, 2 pi),
/// using parity for the lower hemisphere; phi is 0 at the pole.
MeasurementAngles canonicalize(const MeasurementAngles& angles);

enum class MeasurementSign { Plus, Minus };

enum class OptimizationMode { Candidate, ThetaOnly, Full };

std::string_view to_string(OptimizationMode mode);
OptimizationMode optimization_mode_from_string(std::string_view text);

/// Unit vector of the rotated measurement axis for U = t I + i y.sigma.
/// Throws ConstraintViolated when |t^2 + |y|^2 - 1| > 1e-10.
std::array<double, 3> z_vector(double t, const std::array<double, 3>& y);

/// A_+ = (I + z.sigma)/2 in polar form; A_- = I - A_+.
ComplexMatrix measurement_projector(const MeasurementAngles& angles,
                                    MeasurementSign sign);

struct ConditionalState {
  double probability = 0.0;
  /// Normalized d x d state on B. Left as the zero matrix when
  /// probability is zero.
  ComplexMatrix state;
  bool zero_probability() const noexcept { return probability <= 0.0; }
};

ConditionalState conditional_state(const DensityMatrix& rho,
                                   const MeasurementAngles& angles,
                                   MeasurementSign sign);

/// p_+ S(rho_+) + p_- S(rho_-) in bits.
double conditional_entropy(const DensityMatrix& rho,
                           const MeasurementAngles& angles);

/// Conservative sufficient test that the conditional spectrum does not
/// depend on phi: true when a diagonal unitary on B can absorb the phase
/// e^{i phi} carried by the off-diagonal block. Throws NotExtendedX.
bool phi_independence_check(const DensityMatrix& rho,
                            double tol = kDefaultStructureTol);

struct CorrelationResult {
  double classical_correlation = 0.0;
  double min_conditional_entropy = 0.0;
  MeasurementAngles optimal;
  /// Best conditional entropy over the candidate directions.
  double candidate_conditional_entropy = 0.0;
  int evaluations = 0;
};

/// Candidate: {(0,0), (pi/2,0), (pi/2,pi/2), (pi/2,pi)}.
/// ThetaOnly: phi = 0, 65-point theta grid on [0, pi/2] plus golden section.
/// Full: 64 x 64 grid on theta in [0, pi/2], phi in [0, 2 pi) plus
/// Nelder-Mead polishing of the best grid cells.
CorrelationResult classical_correlation(const DensityMatrix& rho,
                                        OptimizationMode mode);

/// S(rho_A) + S(rho_B) - S(rho_AB) in bits.
double mutual_information(const DensityMatrix& rho);

struct DiscordOptions {
  OptimizationMode mode = OptimizationMode::Full;
  /// Run ThetaOnly instead of Candidate when phi provably drops out.
  bool escalate = false;
};

struct DiscordResult {
  double discord = 0.0;
  double classical_correlation = 0.0;
  double mutual_information = 0.0;
  MeasurementAngles optimal_angles;
  OptimizationMode mode = OptimizationMode::Full;
  /// S_cond(best candidate) - S_cond(optimum); set only when Full ran.
  std::optional<double> candidate_gap;
};

DiscordResult entropic_discord(const DensityMatrix& rho,
                               const DiscordOptions& options = {});

}  // namespace qdiscord
