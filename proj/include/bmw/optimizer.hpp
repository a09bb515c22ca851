#pragma once

#include "bmw/key_rate_solver.hpp"
#include "bmw/types.hpp"

#include <cstdint>
#include <vector>

namespace bmw {

enum class SearchMode {
  Uniform, // thresholds fixed at q_i = i/n; only power splits searched
  Free,    // thresholds and power splits both searched
};

const char* to_string(SearchMode m);

struct OptimizeOptions {
  long budget = 0;        // max objective evaluations; 0 picks a default
  std::uint64_t seed = 0; // reserved; the search itself is deterministic
  double min_step = 1e-4; // pattern search stops once steps fall below this
  int workers = 0;        // 0: BMW_WORKERS env var, else hardware count
  double epsilon = 1e-9;  // dominant-face backoff passed to the solver
};

struct OptimizationResult {
  CodeDesign design;
  double secrecy_rate = 0.0;
  SearchMode mode = SearchMode::Free;
  long evaluations = 0;   // objective evaluations actually computed
  double final_step = 0.0; // largest per-dimension step at termination
};

// Number of deterministic starting-grid evaluations for a mode (21 points per
// power split in [0,1]; 21 thresholds in [0.01,0.99], strictly ordered
// combinations). The budget must cover at least this many evaluations.
// Free mode embeds a full uniform-mode run so its optimum dominates the
// uniform one by construction; the returned count includes that embedded grid.
long grid_size(SearchMode mode, int n);

// Best design of n levels under the chosen mode: deterministic grid scan,
// then compass pattern search with halving steps. Results are bit-stable
// across runs and worker counts.
OptimizationResult optimize_design(const ChannelParams& params, int n,
                                   SearchMode mode,
                                   const OptimizeOptions& options = {});

struct SweepRow {
  double power = 0.0;
  int n = 1;
  OptimizationResult result;
};

// optimize_design at every (power, n) pair, row-major in the given order.
std::vector<SweepRow> sweep(const ChannelParams& base,
                            const std::vector<int>& n_list,
                            const std::vector<double>& power_grid,
                            SearchMode mode,
                            const OptimizeOptions& options = {});

} // namespace bmw
