#include "uplogic/linear.hpp"

#include <stdexcept>
#include <string>

#include "uplogic/error.hpp"

namespace uplogic {

bool satisfies_exactly(const LinSystem& sys, const std::vector<Rat>& x) {
  if ((int)x.size() != sys.dimension) return false;
  if (sys.nonneg)
    for (const auto& v : x)
      if (v < 0) return false;
  for (const auto& c : sys.constraints) {
    Rat lhs = 0;
    for (int j = 0; j < sys.dimension; ++j) lhs += c.coeffs[j] * x[j];
    switch (c.rel) {
      case LinRel::Geq:
        if (lhs < c.rhs) return false;
        break;
      case LinRel::Gt:
        if (lhs <= c.rhs) return false;
        break;
      case LinRel::Eq:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

enum class RowRel { Geq, Leq, Eq };

struct StdRow {
  std::vector<Rat> a;
  RowRel rel;
  Rat b;
};

// Dense tableau simplex over exact rationals. Bland's rule (lowest-index
// entering column, lowest-index basic variable on ratio ties) rules out
// cycling, so every run terminates.
class Tableau {
 public:
  Tableau(std::vector<StdRow> rows, int n_structural)
      : n_structural_(n_structural) {
    int m = (int)rows.size();
    n_slack_ = 0;
    for (auto& r : rows) {
      if (r.b < 0) {  // normalize to nonnegative right-hand sides
        for (auto& v : r.a) v = -v;
        r.b = -r.b;
        if (r.rel == RowRel::Geq)
          r.rel = RowRel::Leq;
        else if (r.rel == RowRel::Leq)
          r.rel = RowRel::Geq;
      }
      // a >= 0 row in Leq form gets a slack identity column for free
      if (r.rel == RowRel::Geq && r.b == 0) {
        for (auto& v : r.a) v = -v;
        r.rel = RowRel::Leq;
      }
      if (r.rel != RowRel::Eq) ++n_slack_;
    }
    n_art_ = 0;
    for (const auto& r : rows)
      if (r.rel != RowRel::Leq) ++n_art_;

    int ncols = n_structural_ + n_slack_ + n_art_;
    t_.assign(m, std::vector<Rat>(ncols + 1, Rat(0)));
    basis_.assign(m, -1);
    int slack = n_structural_;
    int art = n_structural_ + n_slack_;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n_structural_; ++j) t_[i][j] = rows[i].a[j];
      t_[i][ncols] = rows[i].b;
      if (rows[i].rel == RowRel::Leq) {
        t_[i][slack] = 1;
        basis_[i] = slack++;
      } else {
        if (rows[i].rel == RowRel::Geq) t_[i][slack++] = -1;
        t_[i][art] = 1;
        basis_[i] = art++;
      }
    }
    art_start_ = n_structural_ + n_slack_;
  }

  // Returns false when the original system is infeasible.
  bool phase1() {
    if (n_art_ == 0) return true;
    std::vector<Rat> cost(ncols(), Rat(0));
    for (int j = art_start_; j < ncols(); ++j) cost[j] = -1;
    maximize(cost);
    Rat z = 0;
    for (int i = 0; i < nrows(); ++i)
      if (basis_[i] >= art_start_) z -= t_[i].back();
    if (z < 0) return false;
    drop_artificials();
    return true;
  }

  void maximize_column(int col) {
    std::vector<Rat> cost(ncols(), Rat(0));
    cost[col] = 1;
    maximize(cost);
  }

  Rat value_of(int col) const {
    for (int i = 0; i < nrows(); ++i)
      if (basis_[i] == col) return t_[i].back();
    return 0;
  }

 private:
  int nrows() const { return (int)basis_.size(); }
  int ncols() const {
    return t_.empty() ? art_start_ + n_art_ : (int)t_[0].size() - 1;
  }

  void maximize(const std::vector<Rat>& cost) {
    std::vector<Rat> reduced(ncols(), Rat(0));
    for (int j = 0; j < ncols(); ++j) {
      Rat r = -cost[j];
      for (int i = 0; i < nrows(); ++i)
        if (cost[basis_[i]] != 0) r += cost[basis_[i]] * t_[i][j];
      reduced[j] = r;
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols(); ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;  // optimal
      int leave = -1;
      Rat best;
      for (int i = 0; i < nrows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i].back() / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0)
        throw std::logic_error("simplex objective unbounded");
      pivot(leave, enter, reduced);
    }
  }

  void pivot(int row, int col, std::vector<Rat>& reduced) {
    Rat p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (int i = 0; i < nrows(); ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rat f = t_[i][col];
      for (std::size_t j = 0; j < t_[i].size(); ++j)
        t_[i][j] -= f * t_[row][j];
    }
    if (reduced[col] != 0) {
      Rat f = reduced[col];
      for (int j = 0; j < ncols(); ++j) reduced[j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  // Pivots basic artificials out (or deletes their redundant rows), then
  // removes the artificial block entirely.
  void drop_artificials() {
    for (int i = nrows() - 1; i >= 0; --i) {
      if (basis_[i] < art_start_) continue;
      int col = -1;
      for (int j = 0; j < art_start_; ++j) {
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        std::vector<Rat> dummy(ncols(), Rat(0));
        pivot(i, col, dummy);
      } else {
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
    for (auto& row : t_) {
      row[art_start_] = row.back();
      row.resize(art_start_ + 1);
    }
    n_art_ = 0;
  }

  int n_structural_;
  int n_slack_ = 0;
  int n_art_ = 0;
  int art_start_ = 0;
  std::vector<std::vector<Rat>> t_;
  std::vector<int> basis_;
};

LPOutcome run_simplex(const LinSystem& sys) {
  for (const auto& c : sys.constraints)
    if ((int)c.coeffs.size() != sys.dimension)
      throw std::invalid_argument("constraint dimension mismatch");
  if (sys.constraints.empty() && !sys.nonneg)
    throw std::invalid_argument("empty system");

  int n = sys.dimension;
  bool strict = false;
  for (const auto& c : sys.constraints) strict |= c.rel == LinRel::Gt;

  int base = sys.nonneg ? n : 2 * n;
  int t_col = strict ? base : -1;
  int n_y = base + (strict ? 1 : 0);

  std::vector<StdRow> rows;
  rows.reserve(sys.constraints.size() + 1);
  for (const auto& c : sys.constraints) {
    StdRow r{std::vector<Rat>(n_y, Rat(0)), RowRel::Geq, c.rhs};
    for (int j = 0; j < n; ++j) {
      if (sys.nonneg) {
        r.a[j] = c.coeffs[j];
      } else {
        r.a[2 * j] = c.coeffs[j];
        r.a[2 * j + 1] = -c.coeffs[j];
      }
    }
    if (c.rel == LinRel::Eq) r.rel = RowRel::Eq;
    if (c.rel == LinRel::Gt) r.a[t_col] = -1;  // a.x - t >= b
    rows.push_back(std::move(r));
  }
  if (strict) {
    StdRow cap{std::vector<Rat>(n_y, Rat(0)), RowRel::Leq, Rat(1)};
    cap.a[t_col] = 1;
    rows.push_back(std::move(cap));
  }

  Tableau tab(std::move(rows), n_y);
  if (!tab.phase1()) return LPOutcome{false, {}};
  if (strict) {
    tab.maximize_column(t_col);
    if (tab.value_of(t_col) <= 0) return LPOutcome{false, {}};
  }

  LPOutcome out;
  out.feasible = true;
  out.witness.resize(n);
  for (int j = 0; j < n; ++j)
    out.witness[j] = sys.nonneg
                         ? tab.value_of(j)
                         : tab.value_of(2 * j) - tab.value_of(2 * j + 1);
  if (!satisfies_exactly(sys, out.witness))
    throw std::logic_error("simplex witness failed exact re-substitution");
  return out;
}

}  // namespace

LPOutcome solve_feasibility(const LinSystem& sys) { return run_simplex(sys); }

LPOutcome small_support_solution(const LinSystem& sys) {
  if (!sys.nonneg)
    throw std::invalid_argument(
        "small_support_solution requires a nonneg system");
  LPOutcome out = run_simplex(sys);
  if (out.feasible) {
    std::size_t positive = 0;
    for (const auto& v : out.witness) positive += v > 0;
    if (positive > sys.constraints.size())
      throw std::logic_error("small-support witness exceeds the row bound");
  }
  return out;
}

}  // namespace uplogic
