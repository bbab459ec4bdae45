#pragma once

// Exact rational linear programming for stability-cell interiors.
//
// The one problem solved here is the margin program
//
//     maximise t   subject to   f_I + t <= sum_{i in I} x_i <= f_I + 1 - t
//
// over a family of index sets I.  The strict system f_I < sum x_i < f_I + 1
// is solvable iff the optimal margin is positive.  We solve the DUAL as a
// simplex tableau with one equality row per primal variable: it has few rows
// (the x's and t) and one column per one-sided constraint, which keeps the
// exact-arithmetic pivots cheap.  Bland's rule guarantees termination.
//
// At the optimum the multipliers on the equality rows recover the primal
// witness (x, t), and the column values recover nonnegative weights on the
// one-sided constraints.  When the margin is <= 0 those weights combine the
// strict inequalities into a contradiction: their linear parts cancel and
// the constant part is nonpositive, so any solution would give 0 < 0.

#include <jacgen/numeric.hpp>

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace jacgen {

struct MarginConstraint {
  std::vector<int> support;  // 1-based x indices
  long long bound;           // value f_I
};

struct MarginDualWeight {
  size_t constraint;  // index into the constraint list
  bool upper;         // false: weight on "sum >= f_I + t", true: on the upper side
  Rat weight;
};

struct MarginSolveResult {
  Rat margin;                         // optimal t
  std::vector<Rat> x;                 // optimal primal witness
  std::vector<MarginDualWeight> dual; // optimal dual weights (nonzero entries)
};

namespace detail {

class SimplexTableau {
 public:
  // rows: equality constraints E y = g, y >= 0, g >= 0. Minimise c^T y.
  SimplexTableau(std::vector<std::vector<Rat>> E, std::vector<Rat> g)
      : m_(E.size()), n_(E.empty() ? 0 : E[0].size()), A_(std::move(E)),
        b_(std::move(g)) {
    // Append artificial columns and start from the artificial basis.
    for (size_t i = 0; i < m_; ++i) {
      for (size_t r = 0; r < m_; ++r) A_[r].push_back(r == i ? Rat(1) : Rat(0));
      basis_.push_back(n_ + i);
    }
    total_cols_ = n_ + m_;
  }

  size_t num_structural() const { return n_; }
  size_t artificial_col(size_t row) const { return n_ + row; }

  // Minimises sum of costs; artificials barred from entering when
  // allow_artificial is false.  Returns the objective value.
  Rat run(const std::vector<Rat>& cost, bool allow_artificial) {
    // Reduced-cost row: r_j = c_j - c_B^T B^{-1} A_j over the current tableau.
    std::vector<Rat> r = cost;
    Rat obj(0);
    for (size_t i = 0; i < m_; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (size_t j = 0; j < total_cols_; ++j) r[j] -= cb * A_[i][j];
      obj += cb * b_[i];
    }
    while (true) {
      // Bland: lowest-index column with negative reduced cost.
      size_t enter = SIZE_MAX;
      for (size_t j = 0; j < total_cols_; ++j) {
        if (!allow_artificial && j >= n_) break;
        if (r[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) break;
      // Ratio test; lowest basis index breaks ties.
      size_t leave = SIZE_MAX;
      Rat best;
      for (size_t i = 0; i < m_; ++i) {
        if (A_[i][enter] <= 0) continue;
        Rat ratio = b_[i] / A_[i][enter];
        if (leave == SIZE_MAX || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == SIZE_MAX)
        throw std::logic_error("margin LP: unbounded dual");
      pivot(leave, enter, r, obj);
    }
    final_reduced_ = r;
    return obj;
  }

  // Pivot basic artificials out after phase 1.  Their value is zero, so a
  // pivot on any nonzero structural entry keeps the point feasible; rows
  // with no such entry are redundant equalities and stay inert.
  void drive_out_artificials() {
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (A_[i][j] == 0) continue;
        std::vector<Rat> dummy(total_cols_, Rat(0));
        Rat dummy_obj(0);
        pivot(i, j, dummy, dummy_obj);
        break;
      }
    }
  }

  // After run(): value of a (basic) variable.
  Rat value_of(size_t col) const {
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] == col) return b_[i];
    return Rat(0);
  }

  const std::vector<Rat>& reduced_costs() const { return final_reduced_; }

 private:
  void pivot(size_t row, size_t col, std::vector<Rat>& r, Rat& obj) {
    Rat p = A_[row][col];
    for (size_t j = 0; j < total_cols_; ++j) A_[row][j] /= p;
    b_[row] /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || A_[i][col] == 0) continue;
      Rat f = A_[i][col];
      for (size_t j = 0; j < total_cols_; ++j) A_[i][j] -= f * A_[row][j];
      b_[i] -= f * b_[row];
    }
    if (r[col] != 0) {
      Rat f = r[col];
      for (size_t j = 0; j < total_cols_; ++j) r[j] -= f * A_[row][j];
      obj += f * b_[row];
    }
    basis_[row] = col;
  }

  size_t m_, n_, total_cols_ = 0;
  std::vector<std::vector<Rat>> A_;
  std::vector<Rat> b_;
  std::vector<size_t> basis_;
  std::vector<Rat> final_reduced_;
};

}  // namespace detail

inline MarginSolveResult solve_margin_lp(
    int num_x, const std::vector<MarginConstraint>& cons) {
  MarginSolveResult out;
  if (cons.empty()) {
    out.margin = Rat(1, 2);
    out.x.assign(static_cast<size_t>(num_x), Rat(0));
    return out;
  }

  size_t K = cons.size();
  size_t rows = static_cast<size_t>(num_x) + 1;  // one per x_i, one for t
  size_t cols = 2 * K;                           // lower weights, then upper

  std::vector<std::vector<Rat>> E(rows, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> g(rows, Rat(0));
  g[rows - 1] = 1;

  for (size_t k = 0; k < K; ++k) {
    for (int i : cons[k].support) {
      E[static_cast<size_t>(i - 1)][k] = -1;       // lower side
      E[static_cast<size_t>(i - 1)][K + k] = 1;    // upper side
    }
    E[rows - 1][k] = 1;
    E[rows - 1][K + k] = 1;
  }

  detail::SimplexTableau tab(std::move(E), std::move(g));

  std::vector<Rat> phase1(2 * K + rows, Rat(0));
  for (size_t i = 0; i < rows; ++i) phase1[2 * K + i] = 1;
  Rat infeas = tab.run(phase1, true);
  if (infeas != 0)
    throw std::logic_error("margin LP: dual system inconsistent");
  tab.drive_out_artificials();

  std::vector<Rat> phase2(2 * K + rows, Rat(0));
  for (size_t k = 0; k < K; ++k) {
    phase2[k] = Rat(-cons[k].bound);
    phase2[K + k] = Rat(cons[k].bound + 1);
  }
  out.margin = tab.run(phase2, false);

  // Equality-row multipliers from the reduced costs of the artificials;
  // they are the optimal primal (x, t).
  const auto& r = tab.reduced_costs();
  out.x.resize(static_cast<size_t>(num_x));
  for (int i = 0; i < num_x; ++i)
    out.x[static_cast<size_t>(i)] = -r[tab.artificial_col(static_cast<size_t>(i))];
  Rat t_check = -r[tab.artificial_col(rows - 1)];
  if (t_check != out.margin)
    throw std::logic_error("margin LP: duality gap");

  for (size_t k = 0; k < K; ++k) {
    Rat lo = tab.value_of(k), up = tab.value_of(K + k);
    if (lo != 0) out.dual.push_back({k, false, lo});
    if (up != 0) out.dual.push_back({k, true, up});
  }

  // Cross-check both certificates against the original system.
  for (size_t k = 0; k < K; ++k) {
    Rat s(0);
    for (int i : cons[k].support) s += out.x[static_cast<size_t>(i - 1)];
    if (s - cons[k].bound < out.margin ||
        Rat(cons[k].bound + 1) - s < out.margin)
      throw std::logic_error("margin LP: primal witness violates a constraint");
  }
  {
    std::vector<Rat> lin(static_cast<size_t>(num_x), Rat(0));
    Rat cons_sum(0), weight_sum(0);
    for (const auto& dw : out.dual) {
      if (dw.weight < 0) throw std::logic_error("margin LP: negative dual weight");
      weight_sum += dw.weight;
      const auto& c = cons[dw.constraint];
      for (int i : c.support)
        lin[static_cast<size_t>(i - 1)] += dw.upper ? -dw.weight : dw.weight;
      cons_sum += dw.weight * (dw.upper ? Rat(c.bound + 1) : Rat(-c.bound));
    }
    for (const auto& v : lin)
      if (v != 0) throw std::logic_error("margin LP: dual combination not null");
    if (weight_sum != 1 || cons_sum != out.margin)
      throw std::logic_error("margin LP: dual certificate mismatch");
  }
  return out;
}

}  // namespace jacgen
