#pragma once

#include "bmw/types.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace bmw::detail {

// Dense two-phase tableau simplex for the small dummy-rate allocation
// programs (a dozen variables, a few dozen rows). Bland's rule everywhere,
// so it cannot cycle; speed is irrelevant at this scale.
//
//   minimize c.x   s.t.   a_ub x <= b_ub,  a_eq x = b_eq,  x >= 0
class SimplexSolver {
 public:
  enum class Status { Optimal, Infeasible, Unbounded };

  struct Result {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
  };

  static Result solve(const std::vector<double>& c,
                      const std::vector<std::vector<double>>& a_ub,
                      const std::vector<double>& b_ub,
                      const std::vector<std::vector<double>>& a_eq,
                      const std::vector<double>& b_eq) {
    const std::size_t nv = c.size();
    const std::size_t m = a_ub.size() + a_eq.size();

    // Column layout: structural vars, one slack/surplus per ub row,
    // artificials as needed, then the rhs.
    std::size_t ncols = nv + a_ub.size();
    std::vector<int> art_col; // artificial column per row, -1 if none
    art_col.reserve(m);

    struct Row {
      std::vector<double> a;
      double b;
      double slack_sign; // +1 slack, -1 surplus, 0 none (equality)
      std::size_t slack_col = SIZE_MAX;
    };
    std::vector<Row> rows;
    rows.reserve(m);

    std::size_t slack_idx = nv;
    for (std::size_t i = 0; i < a_ub.size(); ++i) {
      Row r{a_ub[i], b_ub[i], +1.0, slack_idx++};
      if (r.b < 0.0) { // flip to >= with positive rhs; slack becomes surplus
        for (double& v : r.a) v = -v;
        r.b = -r.b;
        r.slack_sign = -1.0;
      }
      rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < a_eq.size(); ++i) {
      Row r{a_eq[i], b_eq[i], 0.0, SIZE_MAX};
      if (r.b < 0.0) {
        for (double& v : r.a) v = -v;
        r.b = -r.b;
      }
      rows.push_back(std::move(r));
    }

    // Rows needing an artificial: equalities and flipped (surplus) rows.
    for (auto& r : rows) {
      const bool needs_art = (r.slack_sign <= 0.0);
      art_col.push_back(needs_art ? static_cast<int>(ncols++) : -1);
    }

    std::vector<std::vector<double>> t(m, std::vector<double>(ncols + 1, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < nv; ++j) t[i][j] = rows[i].a[j];
      if (rows[i].slack_col != SIZE_MAX) t[i][rows[i].slack_col] = rows[i].slack_sign;
      if (art_col[i] >= 0) t[i][static_cast<std::size_t>(art_col[i])] = 1.0;
      t[i][ncols] = rows[i].b;
      basis[i] = (art_col[i] >= 0) ? static_cast<std::size_t>(art_col[i])
                                   : rows[i].slack_col;
    }

    std::vector<char> is_art(ncols, 0);
    for (int ac : art_col) {
      if (ac >= 0) is_art[static_cast<std::size_t>(ac)] = 1;
    }

    // Phase 1: minimize the sum of artificials.
    std::vector<double> phase1_cost(ncols, 0.0);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (is_art[j]) phase1_cost[j] = 1.0;
    }
    if (!iterate(t, basis, phase1_cost, is_art, /*allow_art=*/true)) {
      return {Status::Unbounded, {}, 0.0}; // cannot happen: phase 1 is bounded
    }
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (is_art[basis[i]]) infeas += t[i][ncols];
    }
    if (infeas > kFeasTol) return {Status::Infeasible, {}, 0.0};

    // Pivot leftover (degenerate) artificials out of the basis when possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_art[basis[i]]) continue;
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (!is_art[j] && std::fabs(t[i][j]) > kPivotTol) { enter = j; break; }
      }
      if (enter != SIZE_MAX) pivot(t, basis, i, enter);
      // Otherwise the row is redundant; its artificial stays basic at zero.
    }

    // Phase 2 with the real costs; artificial columns are barred.
    std::vector<double> phase2_cost(ncols, 0.0);
    for (std::size_t j = 0; j < nv; ++j) phase2_cost[j] = c[j];
    if (!iterate(t, basis, phase2_cost, is_art, /*allow_art=*/false)) {
      return {Status::Unbounded, {}, 0.0};
    }

    Result res;
    res.status = Status::Optimal;
    res.x.assign(nv, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < nv) res.x[basis[i]] = t[i][ncols];
    }
    res.objective = 0.0;
    for (std::size_t j = 0; j < nv; ++j) res.objective += c[j] * res.x[j];
    return res;
  }

 private:
  static constexpr double kPivotTol = 1e-11;
  static constexpr double kFeasTol = 1e-9;
  static constexpr int kMaxIters = 20000;

  static void pivot(std::vector<std::vector<double>>& t,
                    std::vector<std::size_t>& basis, std::size_t row,
                    std::size_t col) {
    const std::size_t m = t.size();
    const std::size_t w = t[row].size();
    const double p = t[row][col];
    for (std::size_t j = 0; j < w; ++j) t[row][j] /= p;
    t[row][col] = 1.0; // kill roundoff on the pivot itself
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      const double f = t[i][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) t[i][j] -= f * t[row][j];
      t[i][col] = 0.0;
    }
    basis[row] = col;
  }

  // Runs Bland-rule iterations to optimality of `cost`. Returns false on
  // unboundedness. Reduced costs are recomputed from scratch each iteration;
  // these tableaus are tiny and this avoids drift.
  static bool iterate(std::vector<std::vector<double>>& t,
                      std::vector<std::size_t>& basis,
                      const std::vector<double>& cost,
                      const std::vector<char>& is_art, bool allow_art) {
    const std::size_t m = t.size();
    const std::size_t ncols = cost.size();
    for (int iter = 0; iter < kMaxIters; ++iter) {
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (!allow_art && is_art[j]) continue;
        bool basic = false;
        for (std::size_t i = 0; i < m; ++i) {
          if (basis[i] == j) { basic = true; break; }
        }
        if (basic) continue;
        double reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis[i]] * t[i][j];
        if (reduced < -kPivotTol) { enter = j; break; } // Bland: first improving
      }
      if (enter == SIZE_MAX) return true; // optimal

      std::size_t leave = SIZE_MAX;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] > kPivotTol) {
          const double ratio = t[i][ncols] / t[i][enter];
          if (leave == SIZE_MAX || ratio < best_ratio - 1e-15 ||
              (std::fabs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == SIZE_MAX) return false; // unbounded direction
      pivot(t, basis, leave, enter);
    }
    throw convergence_error("simplex iteration limit exceeded");
  }
};

} // namespace bmw::detail
