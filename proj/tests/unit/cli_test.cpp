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

#include <filesystem>
#include <numbers>

#include "gtest/gtest.h"
#include "qdiscord/state_io.hpp"

using namespace qdiscord;
using namespace qdiscord::cli;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qdiscord_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

const char kHeader[] =
    "index,seed,theta_opt,phi_opt,discord_full,discord_candidate,"
    "discord_geometric,candidate_gap,at_pole_or_equator\n";

}  // namespace

TEST(gen, writes_reproducible_x_states) {
  const auto dir = scratch_dir("gen");
  GenOptions opt;
  opt.count = 3;
  opt.qubits = 3;
  opt.seed = 7;
  opt.x_project = true;
  opt.out_dir = dir / "a";
  const auto first = run_gen(opt);
  ASSERT_EQ(first.size(), 3u);
  for (const auto& path : first) {
    const auto rho = io::read_json_file(path);
    EXPECT_EQ(rho.dim(), 8);
    EXPECT_TRUE(has_x_pattern(rho.matrix()));
  }
  EXPECT_EQ(first[0].filename(), "state_00000.json");
  opt.out_dir = dir / "b";
  const auto second = run_gen(opt);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(read_text_file(first[i]), read_text_file(second[i]));
  }
  opt.seed = 8;
  opt.out_dir = dir / "c";
  EXPECT_NE(read_text_file(run_gen(opt)[0]), read_text_file(first[0]));
  std::filesystem::remove_all(dir);
}

TEST(gen, qudit_dimension) {
  const auto dir = scratch_dir("gen_qudit");
  GenOptions opt;
  opt.d = 3;
  opt.out_dir = dir;
  const auto rho = io::read_json_file(run_gen(opt)[0]);
  EXPECT_EQ(rho.dim(), 6);
  EXPECT_EQ(rho.dim_b(), 3);
  std::filesystem::remove_all(dir);
}

TEST(gen, rejects_bad_arguments) {
  GenOptions opt;
  EXPECT_THROW(run_gen(opt), Error);
  opt.qubits = 2;
  opt.d = 2;
  EXPECT_THROW(run_gen(opt), Error);
  opt.d.reset();
  opt.count = 0;
  EXPECT_THROW(run_gen(opt), Error);
}

TEST(discord, bell_report) {
  cli::DiscordOptions opt;
  opt.state = "bell1";
  const auto report = run_discord(opt);
  EXPECT_NEAR(report["entropic"]["discord"].get<double>(), 1.0, 1e-6);
  EXPECT_NEAR(report["geometric"]["discord"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(report["geometric"]["compact_x_formula"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(report["structure"], "X");
  EXPECT_EQ(report["entropic"]["mode"], "full");
  EXPECT_TRUE(report.contains("timing_ms"));
}

TEST(discord, method_selection) {
  cli::DiscordOptions opt;
  opt.state = "werner:0";
  opt.method = Method::Entropic;
  auto report = run_discord(opt);
  EXPECT_NEAR(report["entropic"]["discord"].get<double>(), 0.0, 1e-12);
  EXPECT_FALSE(report.contains("geometric"));
  opt.method = Method::Geometric;
  report = run_discord(opt);
  EXPECT_NEAR(report["geometric"]["discord"].get<double>(), 0.0, 1e-12);
  EXPECT_FALSE(report.contains("entropic"));
}

TEST(discord, candidate_mode_on_ghz_file) {
  const auto dir = scratch_dir("ghz");
  std::filesystem::create_directories(dir);
  io::write_json_file(dir / "ghz3.json", states::ghz(3));
  cli::DiscordOptions opt;
  opt.input = dir / "ghz3.json";
  opt.mode = OptimizationMode::Candidate;
  const auto report = run_discord(opt);
  const double theta = report["entropic"]["optimal_angles"]["theta"].get<double>();
  EXPECT_TRUE(theta == 0.0 || theta == std::numbers::pi / 2) << theta;
  EXPECT_TRUE(report["entropic"]["candidate_gap"].is_null());
  std::filesystem::remove_all(dir);
}

TEST(discord, needs_exactly_one_source) {
  cli::DiscordOptions opt;
  EXPECT_THROW(run_discord(opt), Error);
  opt.state = "bell1";
  opt.input = "x.json";
  EXPECT_THROW(run_discord(opt), Error);
  EXPECT_THROW(method_from_string("both!"), Error);
}

TEST(campaign, thread_count_does_not_change_output) {
  CampaignOptions opt;
  opt.n = 10;
  opt.qubits = 2;
  opt.seed = 5;
  opt.threads = 1;
  const auto serial = campaign_csv(run_campaign(opt));
  opt.threads = 4;
  EXPECT_EQ(campaign_csv(run_campaign(opt)), serial);
  opt.seed = 6;
  EXPECT_NE(campaign_csv(run_campaign(opt)), serial);
}

TEST(campaign, record_consistency) {
  CampaignOptions opt;
  opt.n = 20;
  opt.qubits = 3;
  opt.seed = 11;
  const auto records = run_campaign(opt);
  ASSERT_EQ(records.size(), 20u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    EXPECT_EQ(r.index, static_cast<std::int64_t>(i));
    EXPECT_EQ(r.seed, derive_seed(11, i));
    EXPECT_GE(r.discord_candidate, r.discord_full - 1e-9);
    EXPECT_NEAR(r.candidate_gap, r.discord_candidate - r.discord_full, 1e-12);
    EXPECT_GE(r.discord_geometric, 0.0);
  }
  const auto summary = campaign_summary(records, opt);
  EXPECT_EQ(summary["n"], 20);
  const double f = summary["fraction_at_pole_or_equator"].get<double>();
  EXPECT_GE(f, summary["fraction_theta_at_pole_or_equator"].get<double>());
  EXPECT_GE(f, summary["fraction_candidate_gap_within_tol"].get<double>());
}

TEST(campaign, csv_roundtrip) {
  CampaignOptions opt;
  opt.n = 5;
  opt.seed = 3;
  const auto records = run_campaign(opt);
  const auto text = campaign_csv(records);
  EXPECT_EQ(text.rfind(kHeader, 0), 0u);
  const auto parsed = parse_campaign_csv(text);
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(parsed[i].seed, records[i].seed);
    EXPECT_EQ(parsed[i].theta_opt, records[i].theta_opt);
    EXPECT_EQ(parsed[i].discord_full, records[i].discord_full);
    EXPECT_EQ(parsed[i].at_pole_or_equator, records[i].at_pole_or_equator);
  }
  EXPECT_EQ(campaign_csv(parsed), text);
}

TEST(analyze, all_at_pole) {
  std::string text = kHeader;
  for (int i = 0; i < 4; ++i) {
    text += std::to_string(i) + ",1,0,0,0.5,0.5,0.1,0,true\n";
  }
  const auto out = analyze(parse_campaign_csv(text));
  EXPECT_EQ(out["fraction_at_pole_or_equator"], 1.0);
  ASSERT_EQ(out["points"].size(), 4u);
  EXPECT_EQ(out["points"][0][0], 0.0);
  EXPECT_EQ(out["points"][0][1], 0.0);
  EXPECT_EQ(out["points"][0][2], 1.0);
  EXPECT_EQ(out["candidate_gap_histogram"]["counts"][0], 4);
}

TEST(analyze, rejects_empty_and_malformed) {
  EXPECT_THROW(parse_campaign_csv(""), Error);
  EXPECT_THROW(parse_campaign_csv(kHeader), Error);
  EXPECT_THROW(parse_campaign_csv(std::string(kHeader) + "0,1,x,0,0,0,0,0,true\n"), Error);
  EXPECT_THROW(parse_campaign_csv("a,b\n0,1\n"), Error);
}

TEST(analyze, agrees_with_campaign_summary) {
  CampaignOptions opt;
  opt.n = 30;
  opt.seed = 17;
  const auto records = run_campaign(opt);
  const auto summary = campaign_summary(records, opt);
  const auto out = analyze(parse_campaign_csv(campaign_csv(records)));
  EXPECT_EQ(out["fraction_at_pole_or_equator"], summary["fraction_at_pole_or_equator"]);
  EXPECT_EQ(out["fraction_candidate_gap_within_tol"],
            summary["fraction_candidate_gap_within_tol"]);
}

TEST(theta_at_pole_or_equator, boundaries) {
  EXPECT_TRUE(theta_at_pole_or_equator(0.0, 1e-2));
  EXPECT_TRUE(theta_at_pole_or_equator(std::numbers::pi / 2 - 0.005, 1e-2));
  EXPECT_FALSE(theta_at_pole_or_equator(0.5, 1e-2));
}
