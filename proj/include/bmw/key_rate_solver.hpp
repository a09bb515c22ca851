#pragma once

#include "bmw/mac_region.hpp"
#include "bmw/types.hpp"

#include <utility>
#include <vector>

namespace bmw {

enum class SolveStatus {
  Feasible,            // full program solved, secrecy constraint included
  TimeSharingFallback, // level-1 secrecy floor dropped; time sharing assumed
  NoKey,               // no key-capable level or empty dominant face
};

const char* to_string(SolveStatus s);

// Key material extractable in one game branch, with the dummy-rate
// allocation that attains it.
struct KeyRateSolution {
  SolveStatus status = SolveStatus::NoKey;
  double key_rate = 0.0;
  // Dummy (randomization) rate per level of I_ne = I_k u I_n, ascending level.
  std::vector<std::pair<int, double>> dummy_rates;
  DecodabilitySplit split;
  double eve_q = 0.0;
  double epsilon = 0.0;
};

// Smallest interval index i (1-based) with q <= q_i; q = 1 maps to n.
// At an interval endpoint the smaller interval wins (conservative choice).
int interval_index(const CodeDesign& design, double q);

// Key rate of interval i: the adversary listens with probability q_i, Bob
// decodes levels 1..i, and dummy rates are pushed onto the non-Eve levels to
// pin Eve's total at the dominant face of her capacity region (backed off by
// epsilon). The allocation minimizing leaked key material solves a small LP
// over the materialized subset bounds.
KeyRateSolution solve_key_rate(const ChannelParams& params,
                               const CodeDesign& design, int interval,
                               double epsilon = 1e-9);

// Same program with the level split held fixed while the listening
// probability varies. Nonincreasing in q for a fixed split.
KeyRateSolution solve_key_rate_with_split(const ChannelParams& params,
                                          const CodeDesign& design,
                                          const DecodabilitySplit& split,
                                          double q, double epsilon = 1e-9);

// Value of the adversary's best strategy against a fixed design. The
// adversary commits to one listening probability; only the interval
// thresholds matter, so the game reduces to n candidate branches.
struct GameSolution {
  int optimal_interval = 1; // branch the adversary picks
  std::vector<double> per_interval_key_rates;
  std::vector<SolveStatus> per_interval_status;
  double secrecy_rate = 0.0;
  LevelRates levels;
};

// n >= 2: secrecy rate = min(0.5 * R_1, min_i key_rate_i); if the key rates
// all clear the 0.5 R_1 delivery cap the adversary is indifferent and the
// first interval is reported. n = 1 scores the classic single-level
// worst-case secrecy rate (no key chaining).
GameSolution solve_game(const ChannelParams& params, const CodeDesign& design,
                        double epsilon = 1e-9);

// Closed-form two-level solver: the worked case analysis for n = 2, used as
// an independent oracle for solve_game. Branch keys are reported before the
// 0.5 R_1 cap so tests can see which constraint binds.
struct TwoLevelReport {
  double r1 = 0.0, r2 = 0.0;
  double key_listen = 0.0; // branch q = q_1 (Bob decodes level 1 only)
  double key_full = 0.0;   // branch q = 1 (Bob decodes both levels)
  TwoLevelRegion region_listen = TwoLevelRegion::OmegaN;
  TwoLevelRegion region_full = TwoLevelRegion::OmegaN;
  double value = 0.0; // min(0.5 r1, [min branch key]^+)
};

TwoLevelReport two_level_report(const ChannelParams& params, double q1,
                                double alpha1, double epsilon = 1e-9);
double two_level_solve(const ChannelParams& params, double q1, double alpha1,
                       double epsilon = 1e-9);

} // namespace bmw
