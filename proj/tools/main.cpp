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

// qdiscord: quantum discord of qubit-qudit states from the command line.
//
//   qdiscord gen      --count N (--qubits Q | --d D) [--x-project] --out-dir DIR
//   qdiscord discord  (--input FILE | --state NAME) [--method M] [--opt MODE]
//   qdiscord campaign --n N --qubits {2,3} --csv FILE [--json SUMMARY]
//   qdiscord analyze  --input FILE [--json OUT] [--points FILE]
//
// Global flags: --seed, --threads, --tol-angle, --tol-value.

#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cli_commands.hpp"

namespace {

void emit(const nlohmann::json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    qdiscord::cli::write_text_file(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qdiscord;

  CLI::App app{"Quantum discord for qubit-qudit (2 x d) states"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  double tol_angle = cli::kDefaultAngleTol;
  double tol_value = cli::kDefaultValueTol;
  app.add_option("--seed", seed, "Master RNG seed");
  app.add_option("--threads", threads, "Worker threads for campaigns")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-angle", tol_angle, "Pole/equator angle tolerance (rad)");
  app.add_option("--tol-value", tol_value, "Candidate-gap tolerance (bits)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write Hilbert-Schmidt random states as JSON");
  cli::GenOptions gen_opts;
  int gen_qubits = 0;
  int gen_d = 0;
  gen->add_option("--count", gen_opts.count, "Number of states")->required();
  auto* q_opt = gen->add_option("--qubits", gen_qubits, "Total qubits (2^Q dims)");
  auto* d_opt = gen->add_option("--d", gen_d, "Qudit dimension (2d dims)");
  q_opt->excludes(d_opt);
  gen->add_flag("--x-project", gen_opts.x_project, "Zero all non-X entries");
  gen->add_option("--out-dir", gen_opts.out_dir, "Output directory")->required();

  // discord
  auto* discord = app.add_subcommand("discord", "Entropic and/or geometric discord of one state");
  cli::DiscordOptions disc_opts;
  std::string input;
  std::string state;
  std::string method = "both";
  std::string mode = "full";
  std::string disc_json;
  auto* in_opt = discord->add_option("--input", input, "Density-matrix JSON file");
  auto* st_opt = discord->add_option("--state", state,
                                     "Named state: bell1..bell4, werner:<z>, ghz:<n>, w:<n>, mixed:<dim>");
  in_opt->excludes(st_opt);
  discord->add_option("--method", method, "entropic | geometric | both")
      ->check(CLI::IsMember({"entropic", "geometric", "both"}));
  discord->add_option("--opt", mode, "candidate | theta | full")
      ->check(CLI::IsMember({"candidate", "theta", "full"}));
  discord->add_flag("--escalate", disc_opts.escalate,
                    "Use theta-only search when phi provably drops out");
  discord->add_option("--struct-tol", disc_opts.structure_tol,
                      "Entry magnitude treated as zero when classifying structure");
  discord->add_option("--json", disc_json, "Write the report here instead of stdout");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "Monte-Carlo study of optimal measurement angles");
  cli::CampaignOptions camp_opts;
  std::string camp_csv;
  std::string camp_json;
  campaign->add_option("--n", camp_opts.n, "Number of random X states")->required();
  campaign->add_option("--qubits", camp_opts.qubits, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  campaign->add_option("--csv", camp_csv, "Per-sample CSV output")->required();
  campaign->add_option("--json", camp_json, "Summary JSON output (stdout if omitted)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Bloch-sphere export and statistics of a campaign CSV");
  std::string an_input;
  std::string an_json;
  std::string an_points;
  analyze->add_option("--input", an_input, "Campaign CSV")->required();
  analyze->add_option("--json", an_json, "Analysis JSON output (stdout if omitted)");
  analyze->add_option("--points", an_points, "Optional CSV of x,y,z points");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gen_opts.seed = seed;
      if (*q_opt) gen_opts.qubits = gen_qubits;
      if (*d_opt) gen_opts.d = gen_d;
      for (const auto& p : cli::run_gen(gen_opts)) std::cout << p.string() << "\n";
    } else if (discord->parsed()) {
      if (*in_opt) disc_opts.input = input;
      if (*st_opt) disc_opts.state = state;
      disc_opts.method = cli::method_from_string(method);
      disc_opts.mode = optimization_mode_from_string(mode);
      emit(cli::run_discord(disc_opts), disc_json);
    } else if (campaign->parsed()) {
      camp_opts.seed = seed;
      camp_opts.threads = threads;
      camp_opts.angle_tol = tol_angle;
      camp_opts.value_tol = tol_value;
      const auto records = cli::run_campaign(camp_opts);
      cli::write_text_file(camp_csv, cli::campaign_csv(records));
      emit(cli::campaign_summary(records, camp_opts), camp_json);
    } else if (analyze->parsed()) {
      const auto records = cli::parse_campaign_csv(cli::read_text_file(an_input));
      emit(cli::analyze(records, {tol_angle, tol_value}), an_json);
      if (!an_points.empty()) cli::write_text_file(an_points, cli::points_csv(records));
    }
  } catch (const Error& e) {
    std::cerr << "qdiscord: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
