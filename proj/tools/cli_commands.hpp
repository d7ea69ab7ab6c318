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

// Command implementations behind the qdiscord executable. Kept in a library
// so the tests can drive them without spawning processes.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdiscord/entropic.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord::cli {

inline constexpr double kDefaultAngleTol = 1e-2;
inline constexpr double kDefaultValueTol = 1e-6;

struct GenOptions {
  int count = 1;
  std::optional<int> qubits;
  std::optional<int> d;
  std::uint64_t seed = 0;
  bool x_project = false;
  std::filesystem::path out_dir = ".";
};

/// Writes state_NNNNN.json files and returns their paths in index order.
std::vector<std::filesystem::path> run_gen(const GenOptions& options);

enum class Method { Entropic, Geometric, Both };
Method method_from_string(const std::string& text);

struct DiscordOptions {
  std::optional<std::filesystem::path> input;
  std::optional<std::string> state;
  Method method = Method::Both;
  OptimizationMode mode = OptimizationMode::Full;
  bool escalate = false;
  double structure_tol = kDefaultStructureTol;
};

DensityMatrix load_state(const DiscordOptions& options);
nlohmann::json run_discord(const DiscordOptions& options);

struct CampaignRecord {
  std::int64_t index = 0;
  std::uint64_t seed = 0;
  double theta_opt = 0.0;
  double phi_opt = 0.0;
  double discord_full = 0.0;
  double discord_candidate = 0.0;
  double discord_geometric = 0.0;
  double candidate_gap = 0.0;
  bool at_pole_or_equator = false;
};

struct CampaignOptions {
  int n = 1;
  int qubits = 2;
  std::uint64_t seed = 0;
  int threads = 1;
  double angle_tol = kDefaultAngleTol;
  double value_tol = kDefaultValueTol;
};

/// min(theta, |theta - pi/2|) <= angle_tol.
bool theta_at_pole_or_equator(double theta, double angle_tol);

CampaignRecord evaluate_sample(std::int64_t index, std::uint64_t seed,
                               int qubits, double angle_tol, double value_tol);

/// Records in index order, independent of the thread count.
std::vector<CampaignRecord> run_campaign(const CampaignOptions& options);

std::string campaign_csv(const std::vector<CampaignRecord>& records);
nlohmann::json campaign_summary(const std::vector<CampaignRecord>& records,
                                const CampaignOptions& options);

/// Throws ParseError on a wrong header, a malformed row or no rows.
std::vector<CampaignRecord> parse_campaign_csv(const std::string& text);

struct AnalyzeOptions {
  double angle_tol = kDefaultAngleTol;
  double value_tol = kDefaultValueTol;
};

/// Unit-sphere points, candidate-gap histogram and pole/equator fraction.
nlohmann::json analyze(const std::vector<CampaignRecord>& records,
                       const AnalyzeOptions& options = {});

std::string points_csv(const std::vector<CampaignRecord>& records);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qdiscord::cli
