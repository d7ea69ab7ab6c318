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

// Density-matrix JSON interchange:
//   {"dim_a": 2, "dim_b": d, "matrix": [[[re, im], ...], ...]}
// rows in order, each entry a [re, im] pair.

#include <filesystem>
#include <string>

#include "qdiscord/density_matrix.hpp"

namespace qdiscord::io {

std::string to_json_string(const DensityMatrix& rho);

/// Parses and validates. Throws ParseError on malformed JSON or shape, and
/// the validation errors of DensityMatrix::validate otherwise.
DensityMatrix from_json_string(const std::string& text);

void write_json_file(const std::filesystem::path& path,
                     const DensityMatrix& rho);
DensityMatrix read_json_file(const std::filesystem::path& path);

}  // namespace qdiscord::io
