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

// Eigenvalue fast paths for X and extended-X structured matrices.
//
// A 2d x 2d matrix whose four d x d blocks are each X-shaped only couples
// indices within the orbits {r, d-1-r, d+r, 2d-1-r} (plus {m, d+m} for the
// centre m of odd d), so its spectrum is the union of the spectra of at most
// 4x4 principal sub-blocks. A d x d X matrix splits further into 2x2 pairs.
// All indices here are zero-based.

#include <array>
#include <optional>
#include <vector>

#include "qdiscord/density_matrix.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

struct OrbitDecomposition {
  int d = 0;
  std::vector<std::array<int, 4>> quartets;
  std::optional<std::array<int, 2>> doublet;
};

OrbitDecomposition extended_x_orbits(int d);

/// Spectrum of an extended-X state, descending. Throws NotExtendedX.
std::vector<double> eigenvalues_extended_x(
    const DensityMatrix& rho, double tol = kDefaultStructureTol);

/// Same, for a raw 2d x 2d Hermitian matrix already known to be extended X.
/// No structure check.
std::vector<double> eigenvalues_extended_x_unchecked(const ComplexMatrix& m);

/// Spectrum of a d x d X-structured Hermitian matrix, descending.
/// Throws NotXStructured.
std::vector<double> eigenvalues_x(const ComplexMatrix& m,
                                  double tol = kDefaultStructureTol);

/// Appends the X-pair eigenvalues of m to out without checking or sorting.
/// Entries off the X support are ignored.
void append_eigenvalues_x_unchecked(const ComplexMatrix& m,
                                    std::vector<double>& out);

}  // namespace qdiscord
