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

#include "qdiscord/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qdiscord::io {

using nlohmann::json;

std::string to_json_string(const DensityMatrix& rho) {
  json rows = json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      const Complex z = rho(i, j);
      row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}, {"matrix", rows}};
  return doc.dump() + "\n";
}

DensityMatrix from_json_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  ComplexMatrix m;
  int dim_a = 0;
  int dim_b = 0;
  try {
    dim_a = doc.at("dim_a").get<int>();
    dim_b = doc.at("dim_b").get<int>();
    const auto& rows = doc.at("matrix");
    if (!rows.is_array()) throw Error(ErrorCode::ParseError, "matrix is not an array");
    const auto n = static_cast<Eigen::Index>(rows.size());
    m.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw Error(ErrorCode::ParseError, "matrix is not square");
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& entry = row[static_cast<std::size_t>(j)];
        if (!entry.is_array() || entry.size() != 2) {
          throw Error(ErrorCode::ParseError, "entries must be [re, im] pairs");
        }
        m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return DensityMatrix::validate(std::move(m), dim_b, dim_a);
}

void write_json_file(const std::filesystem::path& path,
                     const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot open " + path.string());
  out << to_json_string(rho);
  if (!out) throw Error(ErrorCode::IOError, "write failed: " + path.string());
}

DensityMatrix read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_string(buffer.str());
}

}  // namespace qdiscord::io
