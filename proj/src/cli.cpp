#include "bmw/cli.hpp"

#include "bmw/csv.hpp"
#include "bmw/key_rate_solver.hpp"
#include "bmw/optimizer.hpp"
#include "bmw/protocol_sim.hpp"
#include "bmw/rate_engine.hpp"

#include <fstream>
#include <sstream>

namespace bmw {

namespace {

OptimizeOptions optimize_options(const RunConfig& cfg) {
  OptimizeOptions opt;
  opt.budget = cfg.get_long_or("budget", 0);
  opt.seed = cfg.get_seed_or(0);
  opt.epsilon = cfg.get_double_or("epsilon", 1e-9);
  return opt;
}

// Buffers the CSV and writes it on success only, so failed runs do not
// leave truncated files behind.
class CsvOutput {
 public:
  explicit CsvOutput(const std::optional<std::string>& path) : path_(path) {}
  std::ostream& stream() { return buf_; }
  bool enabled() const { return path_.has_value(); }
  void commit() {
    if (!path_) return;
    std::ofstream out(*path_, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + *path_);
    out << buf_.str();
  }

 private:
  std::optional<std::string> path_;
  std::ostringstream buf_;
};

std::string join_levels(const std::vector<int>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(levels[i]);
  }
  return s.empty() ? "-" : s;
}

int cmd_rate(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  CodeDesign design;
  if (cfg.has("n")) {
    design = cfg.design();
  } else {
    design = CodeDesign{1, {}, {}};
  }
  design.validate();
  params.validate();

  const double baseline = wcs_secrecy_rate(params);
  const LevelRates levels = level_rates(params, design);
  const std::vector<double> powers = design.level_powers(params.power_p);

  CsvOutput csv(cfg.output_path());
  csv_row(csv.stream(), {"quantity", "level", "value"});
  csv_row(csv.stream(), {"wcs_secrecy_rate", "", csv_number(baseline)});
  for (int i = 1; i <= design.n; ++i) {
    csv_row(csv.stream(), {"level_rate", csv_number(i), csv_number(levels[i - 1])});
  }
  for (int i = 1; i <= design.n; ++i) {
    csv_row(csv.stream(), {"level_power", csv_number(i), csv_number(powers[i - 1])});
  }
  for (int i = 1; i <= design.n; ++i) {
    csv_row(csv.stream(),
            {"forwarding_rate", csv_number(i), csv_number(forwarding_rate(levels, i))});
  }

  out << "wcs_secrecy_rate " << csv_number(baseline) << "\n";
  for (int i = 1; i <= design.n; ++i) {
    out << "level " << i << " rate " << csv_number(levels[i - 1]) << " power "
        << csv_number(powers[i - 1]) << "\n";
  }
  csv.commit();
  return kExitOk;
}

int cmd_decode_set(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  const CodeDesign design = cfg.design();
  const double q = cfg.get_double("eve_q");
  const LevelRates levels = level_rates(params, design);
  const int prefix = interval_index(design, q);
  const DecodabilitySplit split = split_levels(params, q, design, levels, prefix);

  CsvOutput csv(cfg.output_path());
  csv_row(csv.stream(), {"level", "rate", "power", "membership", "order_position"});
  const std::vector<double> powers = design.level_powers(params.power_p);
  std::vector<std::string> membership(design.n + 1, "neither");
  for (int l : split.eve_decodable) membership[l] = "eve";
  for (int l : split.key_capable) membership[l] = "key";
  std::vector<int> position(design.n + 1, 0);
  for (std::size_t i = 0; i < split.ordering.size(); ++i) {
    position[split.ordering[i]] = static_cast<int>(i) + 1;
  }
  for (int l = 1; l <= design.n; ++l) {
    csv_row(csv.stream(), {csv_number(l), csv_number(levels[l - 1]),
                           csv_number(powers[l - 1]), membership[l],
                           csv_number(position[l])});
  }

  out << "eve_q " << csv_number(q) << " bob_prefix " << prefix << "\n";
  out << "eve_decodable " << join_levels(split.eve_decodable) << "\n";
  out << "key_capable " << join_levels(split.key_capable) << "\n";
  out << "neither " << join_levels(split.neither) << "\n";
  out << "ordering " << join_levels(split.ordering) << "\n";
  if (split.ambiguous) out << "note ambiguous maximal set\n";
  csv.commit();
  return kExitOk;
}

int cmd_keyrate(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  const CodeDesign design = cfg.design();
  const double epsilon = cfg.get_double_or("epsilon", 1e-9);

  CsvOutput csv(cfg.output_path());
  std::vector<std::string> header = {"interval", "eve_q", "status", "key_rate"};
  for (int l = 1; l <= design.n; ++l) header.push_back("re_" + std::to_string(l));
  csv_row(csv.stream(), header);

  for (int i = 1; i <= design.n; ++i) {
    const KeyRateSolution sol = solve_key_rate(params, design, i, epsilon);
    std::vector<std::string> row = {csv_number(i), csv_number(sol.eve_q),
                                    to_string(sol.status), csv_number(sol.key_rate)};
    std::vector<std::string> dummies(design.n);
    for (const auto& [level, re] : sol.dummy_rates) dummies[level - 1] = csv_number(re);
    for (int l = 1; l <= design.n; ++l) row.push_back(dummies[l - 1]);
    csv_row(csv.stream(), row);
    out << "interval " << i << " q " << csv_number(sol.eve_q) << " status "
        << to_string(sol.status) << " key_rate " << csv_number(sol.key_rate) << "\n";
  }
  csv.commit();
  return kExitOk;
}

int cmd_game(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  const CodeDesign design = cfg.design();
  const double epsilon = cfg.get_double_or("epsilon", 1e-9);
  const GameSolution game = solve_game(params, design, epsilon);

  CsvOutput csv(cfg.output_path());
  csv_row(csv.stream(), {"row_type", "interval", "eve_q", "key_rate", "status",
                         "secrecy_rate", "optimal_interval"});
  for (std::size_t i = 0; i < game.per_interval_key_rates.size(); ++i) {
    csv_row(csv.stream(),
            {"interval", csv_number(static_cast<int>(i) + 1),
             csv_number(design.threshold(static_cast<int>(i) + 1)),
             csv_number(game.per_interval_key_rates[i]),
             to_string(game.per_interval_status[i]), "", ""});
  }
  csv_row(csv.stream(), {"summary", "", "", "", "", csv_number(game.secrecy_rate),
                         csv_number(game.optimal_interval)});

  out << "secrecy_rate " << csv_number(game.secrecy_rate) << "\n";
  out << "optimal_interval " << game.optimal_interval << "\n";
  csv.commit();
  return kExitOk;
}

void design_cells(const CodeDesign& design, int nmax,
                  std::vector<std::string>& row) {
  for (int i = 0; i < nmax - 1; ++i) {
    row.push_back(i < static_cast<int>(design.thresholds.size())
                      ? csv_number(design.thresholds[i])
                      : "");
  }
  for (int i = 0; i < nmax - 1; ++i) {
    row.push_back(i < static_cast<int>(design.alphas.size())
                      ? csv_number(design.alphas[i])
                      : "");
  }
}

std::vector<std::string> sweep_header(int nmax) {
  std::vector<std::string> header = {"power", "n", "mode", "secrecy_rate"};
  for (int i = 1; i < nmax; ++i) header.push_back("q_" + std::to_string(i));
  for (int i = 1; i < nmax; ++i) header.push_back("alpha_" + std::to_string(i));
  return header;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  const int n = static_cast<int>(cfg.get_long("n"));
  const SearchMode mode = cfg.search_mode();
  const OptimizationResult res = optimize_design(params, n, mode, optimize_options(cfg));

  CsvOutput csv(cfg.output_path());
  csv_row(csv.stream(), sweep_header(n));
  std::vector<std::string> row = {csv_number(params.power_p), csv_number(n),
                                  to_string(mode), csv_number(res.secrecy_rate)};
  design_cells(res.design, n, row);
  csv_row(csv.stream(), row);

  out << "secrecy_rate " << csv_number(res.secrecy_rate) << "\n";
  out << "design n " << n;
  for (double q : res.design.thresholds) out << " q " << csv_number(q);
  for (double a : res.design.alphas) out << " alpha " << csv_number(a);
  out << "\n";
  out << "evaluations " << res.evaluations << "\n";
  csv.commit();
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  const std::vector<int> n_list = cfg.get_int_list("n_list");
  const std::vector<double> power_grid = cfg.get_double_list("power_grid");
  const SearchMode mode = cfg.search_mode();
  const std::vector<SweepRow> rows =
      sweep(params, n_list, power_grid, mode, optimize_options(cfg));

  int nmax = 1;
  for (int n : n_list) nmax = std::max(nmax, n);

  CsvOutput csv(cfg.output_path());
  csv_row(csv.stream(), sweep_header(nmax));
  for (const SweepRow& r : rows) {
    std::vector<std::string> row = {csv_number(r.power), csv_number(r.n),
                                    to_string(mode),
                                    csv_number(r.result.secrecy_rate)};
    design_cells(r.result.design, nmax, row);
    csv_row(csv.stream(), row);
    out << "power " << csv_number(r.power) << " n " << r.n << " rate "
        << csv_number(r.result.secrecy_rate) << "\n";
  }
  csv.commit();
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const ChannelParams params = cfg.channel();
  const CodeDesign design = cfg.design();
  const int frames = static_cast<int>(cfg.get_long("frames"));

  SimOptions sim;
  sim.symbols_per_frame = cfg.get_double_or("symbols_per_frame", 1e4);
  sim.epsilon = cfg.get_double_or("epsilon", 1e-9);
  sim.q_estimate_noise = cfg.get_double_or("q_estimate_noise", 0.0);

  std::vector<double> eve_q;
  if (cfg.has("eve_q")) {
    eve_q = cfg.get_double_list("eve_q");
  } else {
    // Default adversary: the constant optimal strategy against this design.
    const GameSolution game = solve_game(params, design, sim.epsilon);
    eve_q = {design.threshold(game.optimal_interval)};
  }

  const ProtocolResult res = run_protocol(params, design, eve_q, frames,
                                          cfg.get_seed_or(0), sim);

  CsvOutput csv(cfg.output_path());
  csv_row(csv.stream(),
          {"frame", "eve_q", "interval", "key_bits", "msg_bits", "ledger_bits"});
  for (const FrameTrace& f : res.frames) {
    csv_row(csv.stream(), {csv_number(f.frame), csv_number(f.eve_q),
                           csv_number(f.interval), csv_number(f.key_bits),
                           csv_number(f.msg_bits), csv_number(f.ledger_bits)});
  }

  out << "frames " << frames << "\n";
  out << "total_key_bits " << csv_number(res.total_key_bits) << "\n";
  out << "total_msg_bits " << csv_number(res.total_msg_bits) << "\n";
  out << "msg_bits_per_frame " << csv_number(res.total_msg_bits / frames) << "\n";
  out << "starved_frames " << res.starved_frames << "\n";
  csv.commit();
  return kExitOk;
}

} // namespace

std::string cli_usage() {
  return "usage: bmw <command> --config <file> [--output <file>]\n"
         "commands:\n"
         "  rate       single-level baseline and per-level rates\n"
         "  decode-set adversary-decodable set and level split\n"
         "  keyrate    per-interval key rates and dummy-rate allocations\n"
         "  game       adversary's best response and the secrecy rate\n"
         "  optimize   best design for one level count\n"
         "  sweep      optimized designs over a power grid\n"
         "  simulate   frame-level protocol run with a key ledger\n";
}

int dispatch(const std::string& command, const RunConfig& config,
             std::ostream& out, std::ostream& err) {
  try {
    if (command == "rate") return cmd_rate(config, out);
    if (command == "decode-set") return cmd_decode_set(config, out);
    if (command == "keyrate") return cmd_keyrate(config, out);
    if (command == "game") return cmd_game(config, out);
    if (command == "optimize") return cmd_optimize(config, out);
    if (command == "sweep") return cmd_sweep(config, out);
    if (command == "simulate") return cmd_simulate(config, out);
    err << "unknown command: " << command << "\n" << cli_usage();
    return kExitUsage;
  } catch (const config_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const convergence_error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNoConverge;
  } catch (const std::domain_error& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoConverge;
  }
}

} // namespace bmw
