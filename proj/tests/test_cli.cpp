#include "bmw/cli.hpp"

#include "bmw/csv.hpp"
#include "bmw/key_rate_solver.hpp"
#include "bmw/mac_region.hpp"
#include "bmw/optimizer.hpp"
#include "bmw/protocol_sim.hpp"
#include "bmw/rate_engine.hpp"

#include "support/frozen.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

using namespace bmw;
using namespace frozen;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run_command(const std::string& command, const std::string& config_text) {
  std::ostringstream out, err;
  const RunConfig cfg = RunConfig::parse_text(config_text);
  CliRun r;
  r.code = dispatch(command, cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string temp_path(const std::string& stem) {
  const auto dir = std::filesystem::temp_directory_path();
  return (dir / ("bmw_cli_" + stem + ".csv")).string();
}

// Channel and design fixtures matching the pinned constants.
const std::string kTextA =
    "lambda_m = 0.2\nlambda_w = 1.5\npower_p = 10\njam_j = 5\nnoise_var = 1\n";
const std::string kTextB =
    "lambda_m = 0.3\nlambda_w = 0.8\npower_p = 10\njam_j = 5\nnoise_var = 1\n";
const std::string kDesignText = "n = 2\nthresholds = 0.5\nalphas = 0.5\n";

const ChannelParams kSetA{0.2, 1.5, 10.0, 5.0, 1.0};
const ChannelParams kSetB{0.3, 0.8, 10.0, 5.0, 1.0};
const CodeDesign kDesignA{2, {0.5}, {0.5}};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("game command prints the secrecy rate and optimal interval") {
  const CliRun zero = run_command("game", kTextB + "n = 1\n");
  CHECK(zero.code == kExitOk);
  CHECK(zero.err.empty());
  CHECK(zero.out.find("secrecy_rate 0\n") != std::string::npos);
  CHECK(zero.out.find("optimal_interval 1\n") != std::string::npos);

  const std::string csv_path = temp_path("game_a");
  const CliRun r =
      run_command("game", kTextA + kDesignText + "output = " + csv_path + "\n");
  CHECK(r.code == kExitOk);
  const auto out_lines = split_lines(r.out);
  REQUIRE(out_lines.size() == 2);
  CHECK(out_lines[0] == "secrecy_rate " + csv_number(kGameA_Rate));
  CHECK(out_lines[1] == "optimal_interval 1");

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "row_type,interval,eve_q,key_rate,status,secrecy_rate,optimal_interval");
  const auto row1 = split_cells(lines[1]);
  const auto row2 = split_cells(lines[2]);
  const auto summary = split_cells(lines[3]);
  REQUIRE(row1.size() == 7);
  CHECK(row1[0] == "interval");
  CHECK(row1[1] == "1");
  CHECK(row1[2] == csv_number(0.5));
  CHECK(row1[3] == csv_number(kGameA_Key1));
  CHECK(row1[4] == "feasible");
  CHECK(row2[1] == "2");
  CHECK(row2[2] == csv_number(1.0));
  CHECK(row2[3] == csv_number(kGameA_Key2));
  REQUIRE(summary.size() == 7);
  CHECK(summary[0] == "summary");
  CHECK(summary[5] == csv_number(kGameA_Rate));
  CHECK(summary[6] == "1");
  std::filesystem::remove(csv_path);
}

TEST_CASE("rate command defaults to a single level") {
  const std::string csv_path = temp_path("rate_single");
  const CliRun r = run_command("rate", kTextA + "output = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  const CodeDesign single{1, {}, {}};
  const LevelRates levels = level_rates(kSetA, single);
  const auto out_lines = split_lines(r.out);
  REQUIRE(out_lines.size() == 2);
  CHECK(out_lines[0] == "wcs_secrecy_rate " + csv_number(kWcsA_P10));
  CHECK(out_lines[1] == "level 1 rate " + csv_number(levels[0]) + " power " +
                            csv_number(10.0));

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "quantity,level,value");
  CHECK(lines[1] == "wcs_secrecy_rate,," + csv_number(kWcsA_P10));
  CHECK(lines[2] == "level_rate,1," + csv_number(levels[0]));
  CHECK(lines[3] == "level_power,1," + csv_number(10.0));
  CHECK(lines[4] == "forwarding_rate,1," + csv_number(levels[0]));
  std::filesystem::remove(csv_path);
}

TEST_CASE("rate command emits per-level csv matching the library") {
  const std::string csv_path = temp_path("rate_two");
  const CliRun r =
      run_command("rate", kTextA + kDesignText + "output = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  const LevelRates levels = level_rates(kSetA, kDesignA);
  const std::vector<double> powers = kDesignA.level_powers(10.0);
  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 8);
  CHECK(lines[1] == "wcs_secrecy_rate,," + csv_number(kWcsA_P10));
  for (int l = 1; l <= 2; ++l) {
    CHECK(lines[1 + l] == "level_rate," + csv_number(l) + "," +
                              csv_number(levels[l - 1]));
    CHECK(lines[3 + l] == "level_power," + csv_number(l) + "," +
                              csv_number(powers[l - 1]));
    CHECK(lines[5 + l] == "forwarding_rate," + csv_number(l) + "," +
                              csv_number(forwarding_rate(levels, l)));
  }
  CHECK(levels[0] == doctest::Approx(kLevelA_R1).epsilon(1e-12));
  CHECK(levels[1] == doctest::Approx(kLevelA_R2).epsilon(1e-12));
  std::filesystem::remove(csv_path);
}

TEST_CASE("decode-set reports memberships and ordering") {
  // Strong adversary channel so both levels land in the decodable set.
  const std::string strong =
      "lambda_m = 2.0\nlambda_w = 0.05\npower_p = 10\njam_j = 5\nnoise_var = 1\n";
  const ChannelParams params{2.0, 0.05, 10.0, 5.0, 1.0};
  const std::string csv_path = temp_path("decode_set");
  const CliRun r = run_command(
      "decode-set",
      strong + kDesignText + "eve_q = 1\noutput = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  const LevelRates levels = level_rates(params, kDesignA);
  const int prefix = interval_index(kDesignA, 1.0);
  const DecodabilitySplit split =
      split_levels(params, 1.0, kDesignA, levels, prefix);
  CHECK(split.eve_decodable == std::vector<int>{1, 2});
  CHECK(split.key_capable.empty());

  CHECK(r.out.find("eve_q 1 bob_prefix " + std::to_string(prefix) + "\n") !=
        std::string::npos);
  CHECK(r.out.find("eve_decodable 1 2\n") != std::string::npos);
  CHECK(r.out.find("key_capable -\n") != std::string::npos);
  CHECK(r.out.find("neither -\n") != std::string::npos);
  CHECK(r.out.find("ordering 1 2\n") != std::string::npos);
  const bool note_seen =
      r.out.find("note ambiguous maximal set") != std::string::npos;
  CHECK(note_seen == split.ambiguous);

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "level,rate,power,membership,order_position");
  const std::vector<double> powers = kDesignA.level_powers(10.0);
  for (int l = 1; l <= 2; ++l) {
    const auto cells = split_cells(lines[l]);
    REQUIRE(cells.size() == 5);
    CHECK(cells[0] == csv_number(l));
    CHECK(cells[1] == csv_number(levels[l - 1]));
    CHECK(cells[2] == csv_number(powers[l - 1]));
    CHECK(cells[3] == "eve");
    CHECK(cells[4] == csv_number(l));
  }
  std::filesystem::remove(csv_path);

  const CliRun missing = run_command("decode-set", strong + kDesignText);
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("config error: missing required key 'eve_q'") !=
        std::string::npos);
}

TEST_CASE("keyrate emits one row per interval with dummy rates") {
  const std::string csv_path = temp_path("keyrate");
  const CliRun r = run_command(
      "keyrate", kTextA + kDesignText + "output = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "interval,eve_q,status,key_rate,re_1,re_2");
  for (int i = 1; i <= 2; ++i) {
    const KeyRateSolution sol = solve_key_rate(kSetA, kDesignA, i, 1e-9);
    const auto cells = split_cells(lines[i]);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0] == csv_number(i));
    CHECK(cells[1] == csv_number(sol.eve_q));
    CHECK(cells[2] == to_string(sol.status));
    CHECK(cells[3] == csv_number(sol.key_rate));
    std::vector<std::string> expected_re(2);
    for (const auto& [level, re] : sol.dummy_rates) {
      expected_re[level - 1] = csv_number(re);
    }
    CHECK(cells[4] == expected_re[0]);
    CHECK(cells[5] == expected_re[1]);
    const std::string line = "interval " + std::to_string(i) + " q " +
                             csv_number(sol.eve_q) + " status " +
                             to_string(sol.status) + " key_rate " +
                             csv_number(sol.key_rate) + "\n";
    CHECK(r.out.find(line) != std::string::npos);
  }
  std::filesystem::remove(csv_path);
}

TEST_CASE("sweep csv matches direct optimizer output") {
  const std::string csv_path = temp_path("sweep");
  const std::string text = kTextB +
                           "n_list = 1,2\npower_grid = 5,10\nmode = uniform\n"
                           "budget = 21\noutput = " +
                           csv_path + "\n";
  const CliRun r = run_command("sweep", text);
  CHECK(r.code == kExitOk);

  OptimizeOptions opts;
  opts.budget = 21;
  opts.seed = 0;
  opts.epsilon = 1e-9;
  const std::vector<SweepRow> rows =
      sweep(kSetB, {1, 2}, {5.0, 10.0}, SearchMode::Uniform, opts);
  REQUIRE(rows.size() == 4);

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "power,n,mode,secrecy_rate,q_1,alpha_1");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto cells = split_cells(lines[i + 1]);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0] == csv_number(rows[i].power));
    CHECK(cells[1] == csv_number(rows[i].n));
    CHECK(cells[2] == "uniform");
    CHECK(cells[3] == csv_number(rows[i].result.secrecy_rate));
    if (rows[i].n == 1) {
      CHECK(cells[4] == "");
      CHECK(cells[5] == "");
    } else {
      CHECK(cells[4] == csv_number(rows[i].result.design.thresholds[0]));
      CHECK(cells[5] == csv_number(rows[i].result.design.alphas[0]));
    }
    const std::string line = "power " + csv_number(rows[i].power) + " n " +
                             std::to_string(rows[i].n) + " rate " +
                             csv_number(rows[i].result.secrecy_rate) + "\n";
    CHECK(r.out.find(line) != std::string::npos);
  }
  // Power-major ordering.
  CHECK(split_cells(lines[1])[0] == csv_number(5.0));
  CHECK(split_cells(lines[2])[0] == csv_number(5.0));
  CHECK(split_cells(lines[3])[0] == csv_number(10.0));
  CHECK(split_cells(lines[4])[0] == csv_number(10.0));

  // Reruns are byte-identical.
  const std::string again_path = temp_path("sweep_again");
  const std::string again_text = kTextB +
                                 "n_list = 1,2\npower_grid = 5,10\n"
                                 "mode = uniform\nbudget = 21\noutput = " +
                                 again_path + "\n";
  const CliRun again = run_command("sweep", again_text);
  CHECK(again.code == kExitOk);
  CHECK(read_file(again_path) == read_file(csv_path));
  CHECK(again.out == r.out);
  std::filesystem::remove(csv_path);
  std::filesystem::remove(again_path);
}

TEST_CASE("optimize single level reduces to the baseline") {
  const std::string csv_path = temp_path("optimize_one");
  const CliRun r = run_command(
      "optimize", kTextA + "n = 1\nmode = free\noutput = " + csv_path + "\n");
  CHECK(r.code == kExitOk);
  const auto out_lines = split_lines(r.out);
  REQUIRE(out_lines.size() == 3);
  CHECK(out_lines[0] == "secrecy_rate " + csv_number(kWcsA_P10));
  CHECK(out_lines[1] == "design n 1");
  CHECK(out_lines[2] == "evaluations 1");

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "power,n,mode,secrecy_rate");
  CHECK(lines[1] == csv_number(10.0) + ",1,free," + csv_number(kWcsA_P10));
  std::filesystem::remove(csv_path);
}

TEST_CASE("optimize two level respects the budget") {
  const std::string csv_path = temp_path("optimize_two");
  const CliRun r = run_command("optimize",
                               kTextA + "n = 2\nmode = uniform\nbudget = 21\n"
                               "output = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  OptimizeOptions opts;
  opts.budget = 21;
  opts.seed = 0;
  opts.epsilon = 1e-9;
  const OptimizationResult res =
      optimize_design(kSetA, 2, SearchMode::Uniform, opts);
  CHECK(res.evaluations == 21);

  const auto out_lines = split_lines(r.out);
  REQUIRE(out_lines.size() == 3);
  CHECK(out_lines[0] == "secrecy_rate " + csv_number(res.secrecy_rate));
  CHECK(out_lines[1] == "design n 2 q " + csv_number(res.design.thresholds[0]) +
                            " alpha " + csv_number(res.design.alphas[0]));
  CHECK(out_lines[2] == "evaluations 21");

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "power,n,mode,secrecy_rate,q_1,alpha_1");
  const auto cells = split_cells(lines[1]);
  REQUIRE(cells.size() == 6);
  CHECK(cells[3] == csv_number(res.secrecy_rate));
  CHECK(cells[4] == csv_number(res.design.thresholds[0]));
  CHECK(cells[5] == csv_number(res.design.alphas[0]));
  std::filesystem::remove(csv_path);
}

TEST_CASE("simulate writes a frame trace and totals") {
  const std::string csv_path = temp_path("simulate");
  const CliRun r = run_command(
      "simulate", kTextA + kDesignText +
                      "frames = 5\nseed = 42\neve_q = 0.3,0.3,0.3,1,0.3\n"
                      "output = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  SimOptions sim;
  sim.symbols_per_frame = 1e4;
  sim.epsilon = 1e-9;
  sim.q_estimate_noise = 0.0;
  const ProtocolResult res =
      run_protocol(kSetA, kDesignA, {0.3, 0.3, 0.3, 1.0, 0.3}, 5, 42, sim);

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "frame,eve_q,interval,key_bits,msg_bits,ledger_bits");
  for (int t = 1; t <= 5; ++t) {
    const FrameTrace& f = res.frames[t - 1];
    const auto cells = split_cells(lines[t]);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0] == csv_number(f.frame));
    CHECK(cells[1] == csv_number(f.eve_q));
    CHECK(cells[2] == csv_number(f.interval));
    CHECK(cells[3] == csv_number(f.key_bits));
    CHECK(cells[4] == csv_number(f.msg_bits));
    CHECK(cells[5] == csv_number(f.ledger_bits));
  }

  const auto out_lines = split_lines(r.out);
  REQUIRE(out_lines.size() == 5);
  CHECK(out_lines[0] == "frames 5");
  CHECK(out_lines[1] == "total_key_bits " + csv_number(res.total_key_bits));
  CHECK(out_lines[2] == "total_msg_bits " + csv_number(res.total_msg_bits));
  CHECK(out_lines[3] ==
        "msg_bits_per_frame " + csv_number(res.total_msg_bits / 5));
  CHECK(out_lines[4] == "starved_frames " +
                            std::to_string(res.starved_frames));
  std::filesystem::remove(csv_path);
}

TEST_CASE("simulate defaults the adversary to the optimal constant strategy") {
  const std::string csv_path = temp_path("simulate_default");
  const CliRun r = run_command(
      "simulate",
      kTextA + kDesignText + "frames = 3\nseed = 7\noutput = " + csv_path + "\n");
  CHECK(r.code == kExitOk);

  // The design-A game is won at interval 1, so the default constant strategy
  // sits at its threshold.
  const GameSolution game = solve_game(kSetA, kDesignA, 1e-9);
  CHECK(game.optimal_interval == 1);
  const std::string q_cell = csv_number(kDesignA.threshold(1));
  CHECK(q_cell == csv_number(0.5));

  const auto lines = split_lines(read_file(csv_path));
  REQUIRE(lines.size() == 4);
  for (int t = 1; t <= 3; ++t) {
    CHECK(split_cells(lines[t])[1] == q_cell);
  }
  std::filesystem::remove(csv_path);
}

TEST_CASE("dispatch maps failures to exit codes") {
  const CliRun unknown = run_command("frobnicate", kTextA + "n = 1\n");
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("unknown command: frobnicate") != std::string::npos);
  CHECK(unknown.err.find("usage: bmw") != std::string::npos);

  const CliRun missing = run_command("game", kTextA);
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("config error: missing required key 'n'") !=
        std::string::npos);

  const CliRun bad_mode =
      run_command("optimize", kTextA + "n = 2\nmode = banana\n");
  CHECK(bad_mode.code == kExitUsage);
  CHECK(bad_mode.err.find("config error:") != std::string::npos);

  const CliRun bad_number = run_command("rate", "lambda_m = abc\n"
                                                "lambda_w = 1.5\n"
                                                "power_p = 10\n");
  CHECK(bad_number.code == kExitUsage);
  CHECK(bad_number.err.find("config error:") != std::string::npos);

  const CliRun bad_channel = run_command(
      "rate", "lambda_m = -1\nlambda_w = 1.5\npower_p = 10\nn = 1\n");
  CHECK(bad_channel.code == kExitInvariant);
  CHECK(bad_channel.err.find("invalid parameter:") != std::string::npos);

  const CliRun bad_design =
      run_command("rate", kTextA + "n = 2\nthresholds = 0.7,0.2\nalphas = 0.5\n");
  CHECK(bad_design.code == kExitInvariant);
  CHECK(bad_design.err.find("invalid parameter:") != std::string::npos);

  const CliRun small_budget =
      run_command("optimize", kTextA + "n = 2\nmode = uniform\nbudget = 20\n");
  CHECK(small_budget.code == kExitInvariant);
  CHECK(small_budget.err.find("invalid parameter:") != std::string::npos);

  const CliRun bad_output = run_command(
      "rate", kTextA + "n = 1\noutput = /nonexistent_dir_zz9/out.csv\n");
  CHECK(bad_output.code == kExitNoConverge);
  CHECK(bad_output.err.find("error: cannot write output file") !=
        std::string::npos);
}

TEST_CASE("csv files are committed only on success") {
  const std::string csv_path = temp_path("commit");
  {
    std::ofstream out(csv_path, std::ios::binary);
    out << "junk\n";
  }
  const CliRun failed = run_command(
      "rate", kTextA + "n = 2\nthresholds = 0.7,0.2\nalphas = 0.5\n"
              "output = " + csv_path + "\n");
  CHECK(failed.code == kExitInvariant);
  CHECK(read_file(csv_path) == "junk\n");

  const std::string fresh_path = temp_path("commit_fresh");
  std::filesystem::remove(fresh_path);
  const CliRun failed_fresh = run_command(
      "rate", "lambda_m = -1\nlambda_w = 1.5\npower_p = 10\n"
              "output = " + fresh_path + "\n");
  CHECK(failed_fresh.code == kExitInvariant);
  CHECK(!std::filesystem::exists(fresh_path));

  const CliRun ok =
      run_command("rate", kTextA + "n = 1\noutput = " + csv_path + "\n");
  CHECK(ok.code == kExitOk);
  CHECK(read_file(csv_path).rfind("quantity,level,value\n", 0) == 0);
  std::filesystem::remove(csv_path);
}

TEST_CASE("config text parsing rejects malformed input") {
  CHECK_THROWS_AS(RunConfig::parse_text("bogus = 1\n"), config_error);
  CHECK_THROWS_AS(RunConfig::parse_text("lambda_m\n"), config_error);
  CHECK_THROWS_AS(RunConfig::parse_text("= 3\n"), config_error);
  CHECK_THROWS_AS(RunConfig::parse_text("lambda_m = 1\nlambda_m = 2\n"),
                  config_error);

  const RunConfig cfg =
      RunConfig::parse_text("# comment line\n\n  lambda_m = 0.2  \n");
  CHECK(cfg.has("lambda_m"));
  CHECK(cfg.get_double("lambda_m") == 0.2);

  // A single-level design must not carry multi-level parameters.
  const CliRun single =
      run_command("game", kTextA + "n = 1\nthresholds = 0.5\n");
  CHECK(single.code == kExitUsage);
  CHECK(single.err.find("config error:") != std::string::npos);
}

TEST_CASE("installed binary handles help and bad usage") {
#ifdef _WIN32
  return;
#else
  if (!std::filesystem::exists("./bmw")) {
    MESSAGE("bmw binary not found next to the test runner, skipping");
    return;
  }
  const auto shell = [](const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
  };

  const std::string out_txt =
      (std::filesystem::temp_directory_path() / "bmw_cli_proc_out.txt").string();
  CHECK(shell("./bmw --help > " + out_txt + " 2>/dev/null") == 0);
  CHECK(read_file(out_txt).find("usage: bmw") != std::string::npos);
  CHECK(shell("./bmw > /dev/null 2>&1") == kExitUsage);
  CHECK(shell("./bmw frobnicate > /dev/null 2>&1") == kExitUsage);
  CHECK(shell("./bmw game > /dev/null 2>&1") == kExitUsage);

  const std::string cfg_path =
      (std::filesystem::temp_directory_path() / "bmw_cli_proc_cfg.txt").string();
  {
    std::ofstream out(cfg_path, std::ios::binary);
    out << kTextA << "n = 1\n";
  }
  const std::string csv_path = temp_path("proc");
  CHECK(shell("./bmw game --config " + cfg_path + " --output " + csv_path +
              " > " + out_txt + " 2>/dev/null") == 0);
  CHECK(read_file(out_txt).find("secrecy_rate " + csv_number(kWcsA_P10)) !=
        std::string::npos);
  CHECK(read_file(csv_path).rfind("row_type,", 0) == 0);
  CHECK(shell("./bmw game --config /nonexistent_dir_zz9/cfg > /dev/null 2>&1") ==
        kExitUsage);
  std::filesystem::remove(out_txt);
  std::filesystem::remove(cfg_path);
  std::filesystem::remove(csv_path);
#endif
}

} // TEST_SUITE("cli")
