#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ttl/error.hpp"
#include "ttl/rational.hpp"

namespace ttl {

enum class Rel { Eq, Le };

// Linear constraints over nonnegative variables: every query in the toolkit
// is phrased with convex-combination coefficients, so x >= 0 is built in.
struct LinearSystem {
  std::size_t num_vars = 0;
  struct Row {
    std::vector<Rat> coef;
    Rel rel;
    Rat rhs;
  };
  std::vector<Row> rows;

  explicit LinearSystem(std::size_t vars = 0) : num_vars(vars) {}

  void add_row(std::vector<Rat> coef, Rel rel, Rat rhs) {
    if (coef.size() != num_vars) throw InvalidInput("LinearSystem row width mismatch");
    rows.push_back(Row{std::move(coef), rel, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  std::vector<Rat> point;  // structural variables only
};

// Exact rational simplex. Phase 1 decides feasibility with Bland's rule
// (anti-cycling); an optional phase 2 maximizes a linear objective over the
// same tableau. Intended for the small systems arising from convex hulls.
class Simplex {
 public:
  explicit Simplex(const LinearSystem& sys) : n_struct_(sys.num_vars) {
    const std::size_t m = sys.rows.size();
    // Columns: structural vars, then one slack per Le row, then one
    // artificial per row. Rows are normalized to equalities with rhs >= 0.
    std::size_t n_slack = 0;
    for (const auto& r : sys.rows)
      if (r.rel == Rel::Le) ++n_slack;
    n_total_ = n_struct_ + n_slack + m;
    art_begin_ = n_struct_ + n_slack;
    tab_.assign(m, std::vector<Rat>(n_total_ + 1, Rat(0)));
    dead_.assign(n_total_, 0);
    basis_.resize(m);
    std::size_t slack_at = n_struct_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& r = sys.rows[i];
      bool neg = r.rhs < 0;
      for (std::size_t j = 0; j < n_struct_; ++j)
        tab_[i][j] = neg ? -r.coef[j] : r.coef[j];
      if (r.rel == Rel::Le) {
        tab_[i][slack_at] = neg ? Rat(-1) : Rat(1);
        ++slack_at;
      }
      tab_[i][art_begin_ + i] = 1;
      tab_[i][n_total_] = neg ? -r.rhs : r.rhs;
      basis_[i] = art_begin_ + i;
    }
  }

  // Returns true iff the system has a nonnegative solution.
  bool phase1() {
    // Maximize -(sum of artificials).
    std::vector<Rat> c(n_total_, Rat(0));
    for (std::size_t j = art_begin_; j < n_total_; ++j) c[j] = -1;
    auto res = optimize(c);
    if (res.first != LpStatus::Optimal) throw Error("phase 1 cannot be unbounded");
    feasible_ = (res.second == 0);
    if (feasible_) purge_artificials();
    return feasible_;
  }

  // Requires a successful phase1(). Maximizes c (structural width) and leaves
  // the tableau at the optimal basis, so calls can be chained.
  LpResult maximize(const std::vector<Rat>& c_struct) {
    if (!feasible_) throw PreconditionError("maximize on infeasible system");
    if (c_struct.size() != n_struct_) throw InvalidInput("objective width mismatch");
    std::vector<Rat> c(n_total_, Rat(0));
    for (std::size_t j = 0; j < n_struct_; ++j) c[j] = c_struct[j];
    auto res = optimize(c);
    LpResult out;
    out.status = res.first;
    if (out.status == LpStatus::Optimal) {
      out.value = res.second;
      out.point = extract();
    }
    return out;
  }

  std::vector<Rat> extract() const {
    std::vector<Rat> x(n_struct_, Rat(0));
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (basis_[i] < n_struct_) x[basis_[i]] = tab_[i].back();
    return x;
  }

 private:
  // Bland's rule throughout: entering = lowest-index improving column,
  // leaving = lowest basic index among minimum-ratio rows. Terminates on
  // every input, degenerate or not.
  std::pair<LpStatus, Rat> optimize(const std::vector<Rat>& c) {
    const std::size_t m = tab_.size();
    for (;;) {
      std::size_t enter = n_total_;
      for (std::size_t j = 0; j < n_total_; ++j) {
        if (dead_[j]) continue;
        if (reduced_cost(c, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_total_) break;
      std::size_t leave = m;
      Rat best_ratio;
      for (std::size_t i = 0; i < m; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i][n_total_] / tab_[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m) return {LpStatus::Unbounded, Rat(0)};
      pivot(leave, enter);
    }
    Rat value = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (c[basis_[i]] != 0) value += c[basis_[i]] * tab_[i][n_total_];
    return {LpStatus::Optimal, value};
  }

  Rat reduced_cost(const std::vector<Rat>& c, std::size_t j) const {
    // Basic columns always price to zero; skip the scan.
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == j) return Rat(0);
    Rat r = c[j];
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (c[basis_[i]] != 0 && tab_[i][j] != 0) r -= c[basis_[i]] * tab_[i][j];
    return r;
  }

  void pivot(std::size_t r, std::size_t col) {
    Rat p = tab_[r][col];
    for (auto& v : tab_[r]) v /= p;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r || tab_[i][col] == 0) continue;
      Rat f = tab_[i][col];
      for (std::size_t j = 0; j <= n_total_; ++j)
        if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
    }
    basis_[r] = col;
  }

  // After a zero-sum phase 1, drive leftover artificials out of the basis
  // (their values are zero) and retire all artificial columns.
  void purge_artificials() {
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (basis_[i] < art_begin_) continue;
      std::size_t col = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (tab_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < art_begin_) pivot(i, col);
      // Otherwise the row is redundant (all structural coefficients zero,
      // rhs zero); it stays inert with its artificial pinned at zero.
    }
    dead_.assign(n_total_, 0);
    for (std::size_t j = art_begin_; j < n_total_; ++j) dead_[j] = 1;
  }

  std::size_t n_struct_ = 0;
  std::size_t n_total_ = 0;
  std::size_t art_begin_ = 0;
  std::vector<std::vector<Rat>> tab_;
  std::vector<std::size_t> basis_;
  std::vector<char> dead_;
  bool feasible_ = false;
};

// Feasibility query: a nonnegative solution of the system, if one exists.
inline std::optional<std::vector<Rat>> lp_feasible_point(const LinearSystem& sys) {
  Simplex s(sys);
  if (!s.phase1()) return std::nullopt;
  return s.extract();
}

inline LpResult lp_maximize(const LinearSystem& sys, const std::vector<Rat>& objective) {
  Simplex s(sys);
  if (!s.phase1()) return LpResult{LpStatus::Infeasible, Rat(0), {}};
  return s.maximize(objective);
}

}  // namespace ttl
