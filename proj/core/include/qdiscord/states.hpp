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

#include <cstdint>
#include <string>
#include <string_view>

#include "qdiscord/density_matrix.hpp"

namespace qdiscord {

enum class StructureTag { General, X, ExtendedX };

std::string_view to_string(StructureTag tag);

inline constexpr double kDefaultStructureTol = 1e-12;

struct StructureClass {
  StructureTag tag = StructureTag::General;
  double tolerance = kDefaultStructureTol;
};

/// True when every entry off the diagonal and anti-diagonal of the square
/// matrix has magnitude <= tol.
bool has_x_pattern(const ComplexMatrix& m, double tol = kDefaultStructureTol);

/// True when each of the four d x d blocks of a 2d x 2d matrix has X pattern.
bool has_extended_x_pattern(const ComplexMatrix& m,
                            double tol = kDefaultStructureTol);

/// X takes precedence over ExtendedX; single-party states are X or General.
StructureClass classify_structure(const DensityMatrix& rho,
                                  double tol = kDefaultStructureTol);

/// Number of real parameters of the X (4d-1) or extended-X (8d-1 for even d,
/// 8d-5 for odd d) family of 2 (x) d states.
int parameter_count(StructureTag tag, int d);

/// Hilbert-Schmidt-random state G G^dagger / tr(G G^dagger) for a square
/// Ginibre G. Even dims are returned as 2 (x) dim/2.
DensityMatrix sample_hs_random(int dim, std::uint64_t seed);

/// Zeroes every entry off the diagonal and anti-diagonal. Equivalent to the
/// channel sum_i E_i rho E_i with 0/1 masks E_i pairing k with dim-1-k.
DensityMatrix project_to_x(const DensityMatrix& rho);

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-item seed for reproducible campaigns, independent of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

namespace states {

/// k = 1..4: |Phi+>, |Phi->, |Psi+>, |Psi->.
DensityMatrix bell(int k);

/// z |Psi-><Psi-| + (1-z) I/4, z in [0, 1].
DensityMatrix werner(double z);

/// (|0..0> + |1..1>)/sqrt(2) on n >= 2 qubits, as 2 (x) 2^(n-1).
DensityMatrix ghz(int n);

/// Uniform superposition of single-excitation basis states on n >= 2 qubits.
DensityMatrix w(int n);

/// rho_a (x) rho_b, with rho_a a qubit state.
DensityMatrix product(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// I/dim. Even dims are 2 (x) dim/2, odd dims single-party.
DensityMatrix maximally_mixed(int dim);

/// p |0><0| (x) rho1 + (1-p) |1><1| (x) rho2.
DensityMatrix classical_quantum(double p, const DensityMatrix& rho1,
                                const DensityMatrix& rho2);

/// Parses bell1..bell4, werner:<z>, ghz:<n>, w:<n>, mixed:<dim>.
/// Throws BadSpec on anything else.
DensityMatrix from_name(std::string_view spec);

}  // namespace states
}  // namespace qdiscord
