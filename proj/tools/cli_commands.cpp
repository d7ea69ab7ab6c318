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

#include "cli_commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "qdiscord/geometric.hpp"
#include "qdiscord/state_io.hpp"

namespace qdiscord::cli {

using nlohmann::json;

namespace {

constexpr const char* kCsvHeader =
    "index,seed,theta_opt,phi_opt,discord_full,discord_candidate,"
    "discord_geometric,candidate_gap,at_pole_or_equator";

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_field(const std::string& text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad field '" + text + "' on line " +
                                           std::to_string(line));
  }
  return value;
}

int bipartite_dim(const std::optional<int>& qubits, const std::optional<int>& d) {
  if (qubits && d) {
    throw Error(ErrorCode::BadSpec, "give either --qubits or --d, not both");
  }
  if (qubits) {
    if (*qubits < 2 || *qubits > 12) {
      throw Error(ErrorCode::BadSpec, "--qubits must lie in 2..12");
    }
    return 1 << *qubits;
  }
  if (d) {
    if (*d < 2) throw Error(ErrorCode::BadSpec, "--d must be >= 2");
    return 2 * *d;
  }
  throw Error(ErrorCode::BadSpec, "one of --qubits or --d is required");
}

json angles_json(const MeasurementAngles& a) {
  return {{"theta", a.theta}, {"phi", a.phi}};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot open " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IOError, "write failed: " + path.string());
}

std::vector<std::filesystem::path> run_gen(const GenOptions& options) {
  if (options.count < 1) throw Error(ErrorCode::BadSpec, "--count must be >= 1");
  const int dim = bipartite_dim(options.qubits, options.d);
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::IOError,
                "cannot create " + options.out_dir.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> paths;
  for (int i = 0; i < options.count; ++i) {
    auto rho = sample_hs_random(dim, derive_seed(options.seed, std::uint64_t(i)));
    if (options.x_project) rho = project_to_x(rho);
    char name[32];
    std::snprintf(name, sizeof name, "state_%05d.json", i);
    auto path = options.out_dir / name;
    io::write_json_file(path, rho);
    paths.push_back(std::move(path));
  }
  return paths;
}

Method method_from_string(const std::string& text) {
  if (text == "entropic") return Method::Entropic;
  if (text == "geometric") return Method::Geometric;
  if (text == "both") return Method::Both;
  throw Error(ErrorCode::BadSpec, "unknown method '" + text + "'");
}

DensityMatrix load_state(const DiscordOptions& options) {
  if (options.input.has_value() == options.state.has_value()) {
    throw Error(ErrorCode::BadSpec, "give exactly one of --input or --state");
  }
  if (options.input) return io::read_json_file(*options.input);
  return states::from_name(*options.state);
}

json run_discord(const DiscordOptions& options) {
  const auto rho = load_state(options);
  if (!rho.is_qubit_qudit()) {
    throw Error(ErrorCode::InvalidState, "discord needs a 2 (x) d state");
  }
  const auto started = std::chrono::steady_clock::now();
  json report;
  report["dim_a"] = rho.dim_a();
  report["dim_b"] = rho.dim_b();
  report["structure"] = std::string(to_string(classify_structure(rho, options.structure_tol).tag));
  report["structure_tol"] = options.structure_tol;

  if (options.method != Method::Geometric) {
    const auto result = entropic_discord(rho, {options.mode, options.escalate});
    json e = {{"discord", result.discord},
              {"classical_correlation", result.classical_correlation},
              {"mutual_information", result.mutual_information},
              {"optimal_angles", angles_json(result.optimal_angles)},
              {"mode", std::string(to_string(result.mode))}};
    e["candidate_gap"] = result.candidate_gap ? json(*result.candidate_gap) : json(nullptr);
    report["entropic"] = std::move(e);
  }
  if (options.method != Method::Entropic) {
    const auto g = geometric_discord(rho);
    json geo = {{"discord", g.value},
                {"k_max", g.k_max},
                {"e", {g.e(0), g.e(1), g.e(2)}},
                {"nearest_classical_psd", g.nearest.psd},
                {"t", g.nearest.t}};
    if (rho.dim_b() == 2 && has_x_pattern(rho.matrix(), options.structure_tol)) {
      geo["compact_x_formula"] = geometric_discord_x_compact(rho, options.structure_tol);
    }
    report["geometric"] = std::move(geo);
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return report;
}

bool theta_at_pole_or_equator(double theta, double angle_tol) {
  return std::min(theta, std::abs(theta - std::numbers::pi / 2.0)) <= angle_tol;
}

CampaignRecord evaluate_sample(std::int64_t index, std::uint64_t seed,
                               int qubits, double angle_tol, double value_tol) {
  const auto rho = project_to_x(sample_hs_random(1 << qubits, seed));
  const auto full = entropic_discord(rho, {OptimizationMode::Full, false});
  const auto candidate = entropic_discord(rho, {OptimizationMode::Candidate, false});
  CampaignRecord r;
  r.index = index;
  r.seed = seed;
  r.theta_opt = full.optimal_angles.theta;
  r.phi_opt = full.optimal_angles.phi;
  r.discord_full = full.discord;
  r.discord_candidate = candidate.discord;
  r.discord_geometric = geometric_discord(rho).value;
  r.candidate_gap = full.candidate_gap.value_or(0.0);
  r.at_pole_or_equator = theta_at_pole_or_equator(r.theta_opt, angle_tol) ||
                         r.candidate_gap <= value_tol;
  return r;
}

std::vector<CampaignRecord> run_campaign(const CampaignOptions& options) {
  if (options.n < 1) throw Error(ErrorCode::BadSpec, "campaign needs n >= 1");
  if (options.qubits != 2 && options.qubits != 3) {
    throw Error(ErrorCode::BadSpec, "campaign supports 2 or 3 qubits");
  }
  std::vector<CampaignRecord> records(static_cast<std::size_t>(options.n));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (auto i = next.fetch_add(1); i < options.n; i = next.fetch_add(1)) {
      records[static_cast<std::size_t>(i)] =
          evaluate_sample(i, derive_seed(options.seed, std::uint64_t(i)),
                          options.qubits, options.angle_tol, options.value_tol);
    }
  };
  const int threads = std::max(1, std::min(options.threads, options.n));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return records;
}

std::string campaign_csv(const std::vector<CampaignRecord>& records) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    out += std::to_string(r.index) + "," + std::to_string(r.seed) + "," +
           format_double(r.theta_opt) + "," + format_double(r.phi_opt) + "," +
           format_double(r.discord_full) + "," +
           format_double(r.discord_candidate) + "," +
           format_double(r.discord_geometric) + "," +
           format_double(r.candidate_gap) + "," +
           (r.at_pole_or_equator ? "true" : "false") + "\n";
  }
  return out;
}

json campaign_summary(const std::vector<CampaignRecord>& records,
                      const CampaignOptions& options) {
  std::size_t flagged = 0;
  std::size_t gap_ok = 0;
  std::size_t theta_ok = 0;
  double gap_sum = 0.0;
  double gap_max = 0.0;
  for (const auto& r : records) {
    flagged += r.at_pole_or_equator;
    gap_ok += r.candidate_gap <= options.value_tol;
    theta_ok += theta_at_pole_or_equator(r.theta_opt, options.angle_tol);
    gap_sum += r.candidate_gap;
    gap_max = std::max(gap_max, r.candidate_gap);
  }
  const double n = static_cast<double>(records.size());
  return {{"n", records.size()},
          {"qubits", options.qubits},
          {"seed", options.seed},
          {"fraction_at_pole_or_equator", flagged / n},
          {"fraction_candidate_gap_within_tol", gap_ok / n},
          {"fraction_theta_at_pole_or_equator", theta_ok / n},
          {"angle_tol", options.angle_tol},
          {"value_tol", options.value_tol},
          {"mean_candidate_gap", gap_sum / n},
          {"max_candidate_gap", gap_max}};
}

std::vector<CampaignRecord> parse_campaign_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    throw Error(ErrorCode::ParseError, "unexpected CSV header '" + line + "'");
  }
  std::vector<CampaignRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw Error(ErrorCode::ParseError,
                  "expected 9 fields on line " + std::to_string(lineno));
    }
    CampaignRecord r;
    r.index = parse_field<std::int64_t>(f[0], lineno);
    r.seed = parse_field<std::uint64_t>(f[1], lineno);
    r.theta_opt = parse_field<double>(f[2], lineno);
    r.phi_opt = parse_field<double>(f[3], lineno);
    r.discord_full = parse_field<double>(f[4], lineno);
    r.discord_candidate = parse_field<double>(f[5], lineno);
    r.discord_geometric = parse_field<double>(f[6], lineno);
    r.candidate_gap = parse_field<double>(f[7], lineno);
    if (f[8] == "true" || f[8] == "1") {
      r.at_pole_or_equator = true;
    } else if (f[8] == "false" || f[8] == "0") {
      r.at_pole_or_equator = false;
    } else {
      throw Error(ErrorCode::ParseError,
                  "bad boolean on line " + std::to_string(lineno));
    }
    out.push_back(r);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "CSV has no data rows");
  return out;
}

json analyze(const std::vector<CampaignRecord>& records,
             const AnalyzeOptions& options) {
  if (records.empty()) throw Error(ErrorCode::ParseError, "no records to analyze");
  // Gap histogram bins: [0, 1e-12), [1e-12, 1e-10), ..., [1e-2, inf).
  const std::vector<double> edges{0.0, 1e-12, 1e-10, 1e-8, 1e-6, 1e-4, 1e-2};
  std::vector<std::size_t> counts(edges.size(), 0);
  json points = json::array();
  std::size_t flagged = 0;
  std::size_t theta_ok = 0;
  std::size_t gap_ok = 0;
  for (const auto& r : records) {
    const MeasurementAngles a{r.theta_opt, r.phi_opt};
    const auto z = a.direction();
    points.push_back({z[0], z[1], z[2]});
    std::size_t bin = 0;
    while (bin + 1 < edges.size() && r.candidate_gap >= edges[bin + 1]) ++bin;
    ++counts[bin];
    flagged += r.at_pole_or_equator;
    theta_ok += theta_at_pole_or_equator(r.theta_opt, options.angle_tol);
    gap_ok += r.candidate_gap <= options.value_tol;
  }
  const double n = static_cast<double>(records.size());
  return {{"n", records.size()},
          {"fraction_at_pole_or_equator", flagged / n},
          {"fraction_theta_at_pole_or_equator", theta_ok / n},
          {"fraction_candidate_gap_within_tol", gap_ok / n},
          {"angle_tol", options.angle_tol},
          {"value_tol", options.value_tol},
          {"candidate_gap_histogram", {{"lower_edges", edges}, {"counts", counts}}},
          {"points", std::move(points)}};
}

std::string points_csv(const std::vector<CampaignRecord>& records) {
  std::string out = "index,x,y,z\n";
  for (const auto& r : records) {
    const auto z = MeasurementAngles{r.theta_opt, r.phi_opt}.direction();
    out += std::to_string(r.index) + "," + format_double(z[0]) + "," +
           format_double(z[1]) + "," + format_double(z[2]) + "\n";
  }
  return out;
}

}  // namespace qdiscord::cli
