#include "bmw/key_rate_solver.hpp"

#include "bmw/detail/simplex.hpp"
#include "bmw/rate_engine.hpp"

#include <algorithm>
#include <cmath>

namespace bmw {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::TimeSharingFallback: return "time_sharing_fallback";
    case SolveStatus::NoKey: return "no_key";
  }
  return "?";
}

int interval_index(const CodeDesign& design, double q) {
  design.validate();
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");
  for (int i = 1; i < design.n; ++i) {
    if (q <= design.thresholds[i - 1]) return i;
  }
  return design.n;
}

namespace {

constexpr std::size_t kMaxSplitSize = 12; // subset family capped at 2^12

// Exact LP over the dummy rates x_l, l in I_ne:
//   minimize   sum_{l in I_k} x_l
//   subject to x(S) <= cap(S) - eps          for every proper subset S
//              x(I_ne) = cap(I_ne) - eps     (dominant face)
//              0 <= x_l <= R_l
//              x_1 >= 0.5 R_1                (only when 1 in I_ne; may be dropped)
// Solved by cutting planes over the materialized subset family: start from
// the singletons, add violated subset rows, finish with an exhaustive sweep
// over all 2^k - 2 subsets so the returned point is certified feasible.
struct AllocationOutcome {
  bool feasible = false;
  std::vector<double> x;
};

AllocationOutcome solve_allocation(const std::vector<double>& rates,
                                   const std::vector<double>& caps, double total,
                                   const std::vector<char>& in_key,
                                   double secrecy_floor, int floor_var,
                                   double epsilon) {
  const std::size_t k = rates.size();
  const unsigned full = (1u << k) - 1u;

  std::vector<double> cost(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    if (in_key[i]) cost[i] = 1.0;
  }

  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
  auto add_subset_row = [&](unsigned mask) {
    std::vector<double> row(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) row[i] = 1.0;
    }
    a_ub.push_back(std::move(row));
    b_ub.push_back(caps[mask] - epsilon);
  };

  for (std::size_t i = 0; i < k; ++i) {
    if (full != (1u << i)) add_subset_row(1u << i);
    std::vector<double> box(k, 0.0);
    box[i] = 1.0;
    a_ub.push_back(std::move(box));
    b_ub.push_back(rates[i]);
  }
  if (floor_var >= 0) {
    std::vector<double> row(k, 0.0);
    row[floor_var] = -1.0;
    a_ub.push_back(std::move(row));
    b_ub.push_back(-secrecy_floor);
  }
  const std::vector<std::vector<double>> a_eq = {std::vector<double>(k, 1.0)};
  const std::vector<double> b_eq = {total};

  for (int round = 0; round < 256; ++round) {
    const auto lp = detail::SimplexSolver::solve(cost, a_ub, b_ub, a_eq, b_eq);
    if (lp.status == detail::SimplexSolver::Status::Infeasible) return {};
    if (lp.status != detail::SimplexSolver::Status::Optimal) {
      throw convergence_error("dummy-rate allocation did not solve");
    }

    // Exhaustive violation sweep over the whole subset family.
    bool clean = true;
    for (unsigned mask = 1; mask < full; ++mask) {
      if ((mask & (mask - 1)) == 0) continue; // singletons already present
      double sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) sum += lp.x[i];
      }
      if (sum > caps[mask] - epsilon + 1e-10) {
        add_subset_row(mask);
        clean = false;
      }
    }
    if (clean) return {true, lp.x};
  }
  throw convergence_error("subset cutting-plane loop did not settle");
}

} // namespace

KeyRateSolution solve_key_rate_with_split(const ChannelParams& params,
                                          const CodeDesign& design,
                                          const DecodabilitySplit& split,
                                          double q, double epsilon) {
  params.validate();
  design.validate();
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be > 0");

  KeyRateSolution sol;
  sol.split = split;
  sol.eve_q = q;
  sol.epsilon = epsilon;

  if (split.key_capable.empty()) return sol; // NoKey

  std::vector<int> i_ne = split.key_capable;
  i_ne.insert(i_ne.end(), split.neither.begin(), split.neither.end());
  std::sort(i_ne.begin(), i_ne.end());
  const std::size_t k = i_ne.size();
  if (k > kMaxSplitSize) {
    throw std::invalid_argument("non-Eve level split too large for exact LP");
  }

  const LevelRates all_rates = level_rates(params, design);
  const std::vector<double> all_powers = design.level_powers(params.power_p);
  std::vector<double> rates(k), powers(k);
  std::vector<char> in_key(k, 0);
  int floor_var = -1;
  for (std::size_t j = 0; j < k; ++j) {
    rates[j] = all_rates[i_ne[j] - 1];
    powers[j] = all_powers[i_ne[j] - 1];
    in_key[j] = std::binary_search(split.key_capable.begin(),
                                   split.key_capable.end(), i_ne[j]);
    if (i_ne[j] == 1) floor_var = static_cast<int>(j);
  }

  // Interference-free capacity of every subset of I_ne (Eve's levels are
  // conditioned away, the rest carry dummy load only).
  const unsigned full = (1u << k) - 1u;
  std::vector<double> caps(full + 1, 0.0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    double p = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (1u << j)) p += powers[j];
    }
    caps[mask] = eve_capacity_term(params, q, p, 0.0);
  }
  const double total = caps[full] - epsilon;
  if (total < 0.0) return sol; // dominant face empty: NoKey

  const double floor = (floor_var >= 0) ? 0.5 * all_rates[0] : 0.0;

  AllocationOutcome out;
  if (floor_var >= 0) {
    out = solve_allocation(rates, caps, total, in_key, floor, floor_var, epsilon);
    if (out.feasible) {
      sol.status = SolveStatus::Feasible;
    } else {
      out = solve_allocation(rates, caps, total, in_key, 0.0, -1, epsilon);
      if (out.feasible) sol.status = SolveStatus::TimeSharingFallback;
    }
  } else {
    out = solve_allocation(rates, caps, total, in_key, 0.0, -1, epsilon);
    if (out.feasible) sol.status = SolveStatus::Feasible;
  }
  if (!out.feasible) return sol; // NoKey

  double key = 0.0;
  sol.dummy_rates.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double x = std::clamp(out.x[j], 0.0, rates[j]);
    sol.dummy_rates.emplace_back(i_ne[j], x);
    if (in_key[j]) key += rates[j] - x;
  }
  sol.key_rate = std::max(0.0, key);
  return sol;
}

KeyRateSolution solve_key_rate(const ChannelParams& params,
                               const CodeDesign& design, int interval,
                               double epsilon) {
  params.validate();
  design.validate();
  if (interval < 1 || interval > design.n) {
    throw std::invalid_argument("interval index out of range");
  }
  const double q = design.threshold(interval);
  const LevelRates rates = level_rates(params, design);
  const DecodabilitySplit split =
      split_levels(params, q, design, rates, interval);
  return solve_key_rate_with_split(params, design, split, q, epsilon);
}

GameSolution solve_game(const ChannelParams& params, const CodeDesign& design,
                        double epsilon) {
  params.validate();
  design.validate();

  GameSolution game;
  game.levels = level_rates(params, design);

  if (design.n == 1) {
    // Single level: no chaining, classic worst-case wiretap scoring.
    const double base = wcs_secrecy_rate(params);
    game.optimal_interval = 1;
    game.per_interval_key_rates = {base};
    game.per_interval_status = {base > 0.0 ? SolveStatus::Feasible
                                           : SolveStatus::NoKey};
    game.secrecy_rate = base;
    return game;
  }

  game.per_interval_key_rates.resize(design.n);
  game.per_interval_status.resize(design.n);
  int argmin = 1;
  for (int i = 1; i <= design.n; ++i) {
    const KeyRateSolution sol = solve_key_rate(params, design, i, epsilon);
    game.per_interval_key_rates[i - 1] = sol.key_rate;
    game.per_interval_status[i - 1] = sol.status;
    if (sol.key_rate < game.per_interval_key_rates[argmin - 1]) argmin = i;
  }
  const double cap = 0.5 * game.levels[0];
  const double min_key = game.per_interval_key_rates[argmin - 1];
  if (min_key >= cap) {
    // Keys regenerate faster than delivery everywhere; the adversary is
    // indifferent and the first interval is reported.
    game.optimal_interval = 1;
    game.secrecy_rate = cap;
  } else {
    game.optimal_interval = argmin;
    game.secrecy_rate = min_key;
  }
  return game;
}

namespace {

struct BranchCaps {
  double c1_free, c2_free, c_sum, c1_intf, c2_intf;
};

BranchCaps branch_caps(const ChannelParams& params, double q, double p1,
                       double p2) {
  return {
      eve_capacity_term(params, q, p1, 0.0),
      eve_capacity_term(params, q, p2, 0.0),
      eve_capacity_term(params, q, p1 + p2, 0.0),
      eve_capacity_term(params, q, p1, p2),
      eve_capacity_term(params, q, p2, p1),
  };
}

// One adversary branch of the two-level game, solved by the worked case
// analysis instead of the LP. bob_prefix is 1 on the listening branch
// (q = q_1) and 2 on the full branch (q = 1).
double branch_key(const BranchCaps& c, double r1, double r2, int bob_prefix,
                  double epsilon) {
  // Jointly decodable: nothing left to key.
  if (r1 <= c.c1_free && r2 <= c.c2_free && r1 + r2 <= c.c_sum) return 0.0;

  if (r1 <= c.c1_intf) {
    // Level 1 decodable through interference. Key material only from level 2,
    // and only if Bob decodes it on this branch.
    if (bob_prefix < 2) return 0.0;
    const double x2 = c.c2_free - epsilon; // dominant face of the remaining set
    if (x2 < 0.0 || x2 > r2) return 0.0;
    return r2 - x2;
  }

  if (r2 <= c.c2_intf) {
    // Level 2 decodable; level 1 carries the dummy load alone.
    const double x1 = c.c1_free - epsilon;
    if (x1 < 0.0 || x1 > r1) return 0.0;
    return r1 - x1;
  }

  // Neither decodable: both levels share the dominant face of the full region.
  const double total = c.c_sum - epsilon;
  if (total < 0.0) return 0.0;
  const double u1 = std::min(r1, c.c1_free - epsilon);
  const double u2 = std::min(r2, c.c2_free - epsilon);
  if (u1 < 0.0 || u2 < 0.0 || u1 + u2 < total) return 0.0;
  if (bob_prefix >= 2) {
    // Both levels are key material; the split along the face is free.
    return r1 + r2 - total;
  }
  // Only level 1 is key material: push as much dummy load as possible onto
  // level 2. Whether the level-2 box or its capacity binds decides the form
  // (sum-minus-rate vs interference-limited corner).
  const double x1 = std::max(0.0, total - u2);
  return r1 - x1;
}

} // namespace

TwoLevelReport two_level_report(const ChannelParams& params, double q1,
                                double alpha1, double epsilon) {
  params.validate();
  if (!(q1 > 0.0) || !(q1 < 1.0)) {
    throw std::domain_error("q1 must lie strictly in (0,1)");
  }
  CodeDesign design{2, {q1}, {alpha1}};
  design.validate();

  const LevelRates rates = level_rates(params, design);
  const std::vector<double> p = design.level_powers(params.power_p);

  TwoLevelReport rep;
  rep.r1 = rates[0];
  rep.r2 = rates[1];

  const BranchCaps listen = branch_caps(params, q1, p[0], p[1]);
  const BranchCaps fullc = branch_caps(params, 1.0, p[0], p[1]);
  rep.key_listen = branch_key(listen, rep.r1, rep.r2, 1, epsilon);
  rep.key_full = branch_key(fullc, rep.r1, rep.r2, 2, epsilon);
  rep.region_listen = classify_two_level(params, q1, design, rates);
  rep.region_full = classify_two_level(params, 1.0, design, rates);

  const double worst = std::max(0.0, std::min(rep.key_listen, rep.key_full));
  rep.value = std::min(0.5 * rep.r1, worst);
  return rep;
}

double two_level_solve(const ChannelParams& params, double q1, double alpha1,
                       double epsilon) {
  return two_level_report(params, q1, alpha1, epsilon).value;
}

} // namespace bmw
