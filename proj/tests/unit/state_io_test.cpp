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

#include <filesystem>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qdiscord/states.hpp"

using namespace qdiscord;

TEST(state_io, roundtrip_is_exact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int dim = 4 + 2 * int(seed % 3);
    const auto rho = sample_hs_random(dim, seed);
    const auto back = io::from_json_string(io::to_json_string(rho));
    EXPECT_EQ(back.matrix(), rho.matrix());
    EXPECT_EQ(back.dim_a(), rho.dim_a());
    EXPECT_EQ(back.dim_b(), rho.dim_b());
  }
}

TEST(state_io, layout) {
  const auto text = io::to_json_string(states::bell(1));
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["dim_a"], 2);
  EXPECT_EQ(doc["dim_b"], 2);
  ASSERT_EQ(doc["matrix"].size(), 4u);
  EXPECT_DOUBLE_EQ(doc["matrix"][0][3][0].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc["matrix"][0][3][1].get<double>(), 0.0);
}

TEST(state_io, parse_errors) {
  auto code = [](const std::string& text) {
    try {
      io::from_json_string(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IOError;
  };
  EXPECT_EQ(code("{"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"dim_a":2})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"dim_a":1,"dim_b":2,"matrix":[[[1,0],[0,0]],[[0,0]]]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"dim_a":1,"dim_b":2,"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})"),
            ErrorCode::TraceNotOne);
  EXPECT_EQ(code(R"({"dim_a":1,"dim_b":2,"matrix":[[1,0],[0,1]]})"),
            ErrorCode::ParseError);
}

TEST(state_io, file_roundtrip_and_missing_file) {
  const auto dir = std::filesystem::temp_directory_path() / "qdiscord_state_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "ghz3.json";
  io::write_json_file(path, states::ghz(3));
  EXPECT_EQ(io::read_json_file(path).matrix(), states::ghz(3).matrix());
  try {
    io::read_json_file(dir / "missing.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IOError);
  }
}
