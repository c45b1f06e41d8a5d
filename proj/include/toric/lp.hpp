#ifndef TORIC_LP_HPP
#define TORIC_LP_HPP

// Exact rational linear programming: a dense two-phase tableau simplex with
// Bland's anti-cycling rule. Sizes in this library stay in the low hundreds.

#include <toric/number.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

enum class Sense { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  RationalVector coeffs;
  Sense sense = Sense::LessEq;
  Rational rhs = 0;
};

/// maximize objective . x subject to constraints; x_j >= 0 unless free.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<bool> free_var;
  std::vector<LinearConstraint> constraints;
  RationalVector objective;

  explicit LinearProgram(std::size_t n = 0)
      : num_vars(n), free_var(n, false), objective(n, Rational(0)) {}

  void add(RationalVector coeffs, Sense sense, Rational rhs) {
    if (coeffs.size() != num_vars) throw ToricError("LinearProgram::add: wrong coefficient count");
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector x;  ///< valid when Optimal
  Rational value = 0;
};

namespace detail {

class Tableau {
 public:
  std::vector<RationalVector> rows;  // last entry of each row is the rhs
  RationalVector obj;                // reduced costs (maximize); last entry unused
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;             // structural columns, rhs excluded

  void pivot(std::size_t r, std::size_t e) {
    RationalVector& pr = rows[r];
    const Rational inv = 1 / pr[e];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= ncols; ++j) {
      if (pr[j] == 0) continue;
      pr[j] *= inv;
      nz.push_back(j);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][e] == 0) continue;
      const Rational f = rows[i][e];
      for (std::size_t j : nz) rows[i][j] -= f * pr[j];
    }
    if (obj[e] != 0) {
      const Rational f = obj[e];
      for (std::size_t j : nz) obj[j] -= f * pr[j];
    }
    basis[r] = e;
  }

  /// Runs Bland's rule over columns flagged in `allowed`. Returns false if unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (allowed[j] && obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      std::size_t leave = rows.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][ncols] / rows[i][enter];
        if (leave == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }

  /// Sets obj to the reduced costs of the cost vector c (size ncols).
  void set_objective(const RationalVector& c) {
    obj.assign(ncols + 1, Rational(0));
    for (std::size_t j = 0; j < ncols; ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j)
        if (rows[i][j] != 0) obj[j] -= cb * rows[i][j];
    }
  }
};

}  // namespace detail

inline LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  // Column layout: for each variable a positive column, plus a negative
  // column if free; then slack/surplus columns; then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (lp.free_var[j]) neg_col[j] = ncols++;
  }
  const std::size_t m = lp.constraints.size();
  struct RowPlan {
    bool negate;
    Sense sense;
  };
  std::vector<RowPlan> plan(m);
  std::vector<std::size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    // Flip so the rhs is nonnegative; a >= row with zero rhs becomes <= and
    // gets a slack basis column instead of an artificial.
    bool negate = c.rhs < 0 || (c.rhs == 0 && c.sense == Sense::GreaterEq);
    Sense s = c.sense;
    if (negate && s != Sense::Equal) s = (s == Sense::LessEq) ? Sense::GreaterEq : Sense::LessEq;
    plan[i] = {negate, s};
    if (s != Sense::Equal) slack_col[i] = ncols++;
  }
  const std::size_t first_art = ncols;
  for (std::size_t i = 0; i < m; ++i)
    if (plan[i].sense != Sense::LessEq) art_col[i] = ncols++;

  detail::Tableau t;
  t.ncols = ncols;
  t.rows.assign(m, RationalVector(ncols + 1, Rational(0)));
  t.basis.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    const Rational flip = plan[i].negate ? -1 : 1;
    auto& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j] == 0) continue;
      row[pos_col[j]] = flip * c.coeffs[j];
      if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = -flip * c.coeffs[j];
    }
    row[ncols] = flip * c.rhs;
    if (plan[i].sense == Sense::LessEq) {
      row[slack_col[i]] = 1;
      t.basis[i] = slack_col[i];
    } else {
      if (plan[i].sense == Sense::GreaterEq) row[slack_col[i]] = -1;
      row[art_col[i]] = 1;
      t.basis[i] = art_col[i];
    }
  }

  std::vector<bool> allowed(ncols, true);
  if (first_art < ncols) {
    RationalVector phase1(ncols, Rational(0));
    for (std::size_t j = first_art; j < ncols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(allowed);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      if (t.basis[i] >= first_art) infeasibility += t.rows[i][ncols];
    if (infeasibility != 0) return {LpStatus::Infeasible, {}, 0};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t e = first_art;
      for (std::size_t j = 0; j < first_art; ++j)
        if (t.rows[i][j] != 0) {
          e = j;
          break;
        }
      if (e < first_art) {
        t.pivot(i, e);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = first_art; j < ncols; ++j) allowed[j] = false;
  }

  RationalVector cost(ncols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[pos_col[j]] = lp.objective[j];
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -lp.objective[j];
  }
  t.set_objective(cost);
  if (!t.optimize(allowed)) return {LpStatus::Unbounded, {}, 0};

  RationalVector col_value(ncols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) col_value[t.basis[i]] = t.rows[i][ncols];
  LpResult result;
  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = col_value[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) result.x[j] -= col_value[neg_col[j]];
    result.value += lp.objective[j] * result.x[j];
  }
  return result;
}

/// Feasible point of the constraint system, ignoring the objective.
inline std::optional<RationalVector> find_feasible_point(LinearProgram lp) {
  lp.objective.assign(lp.num_vars, Rational(0));
  auto r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace toric

#endif  // TORIC_LP_HPP
