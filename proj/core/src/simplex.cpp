#include "ballcover/simplex.hpp"

#include <optional>

#include "ballcover/errors.hpp"

namespace ballcover {
namespace {

// Tableau over the columns [structural | slack]. Row i reads
// sum_j rows[i][j] x_j = rhs[i] with basis[i] the basic column of row i;
// reduced[j] holds the reduced cost of column j for the maximization.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& rhs,
          const std::vector<Rational>& objective)
      : structural_(objective.size()),
        rows_(rhs.size(), std::vector<Rational>(objective.size() + rhs.size())),
        rhs_(rhs),
        basis_(rhs.size()),
        reduced_(objective.size() + rhs.size()) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < structural_; ++j) rows_[i][j] = a[i][j];
      rows_[i][structural_ + i] = 1;
      basis_[i] = structural_ + i;
    }
    for (std::size_t j = 0; j < structural_; ++j) reduced_[j] = objective[j];
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return reduced_.size(); }
  std::size_t structural() const { return structural_; }
  std::size_t pivots() const { return pivots_; }

  const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }
  const Rational& reduced(std::size_t j) const { return reduced_[j]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

  void pivot(std::size_t r, std::size_t e) {
    if (++pivots_ > pivot_cap()) throw InternalError("simplex exceeded its pivot cap");
    const Rational scale = rows_[r][e];
    auto& pivot_row = rows_[r];
    for (auto& value : pivot_row) {
      if (!value.is_zero()) value /= scale;
    }
    rhs_[r] /= scale;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][e].is_zero()) continue;
      const Rational factor = rows_[i][e];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!pivot_row[j].is_zero()) row[j] -= factor * pivot_row[j];
      }
      rhs_[i] -= factor * rhs_[r];
    }
    if (!reduced_[e].is_zero()) {
      const Rational factor = reduced_[e];
      for (std::size_t j = 0; j < reduced_.size(); ++j) {
        if (!pivot_row[j].is_zero()) reduced_[j] -= factor * pivot_row[j];
      }
    }
    basis_[r] = e;
  }

  std::vector<Rational> basic_solution() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  std::vector<Rational> row_multipliers() const {
    std::vector<Rational> y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = -reduced_[structural_ + i];
    return y;
  }

 private:
  std::size_t pivot_cap() const {
    const std::size_t size = rows_.size() + reduced_.size() + 1;
    return 64 * size * size;
  }

  std::size_t structural_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  std::size_t pivots_ = 0;
};

void check_shape(const DenseLp& lp) {
  if (lp.a.size() != lp.rows()) throw InputError("LP matrix row count mismatch");
  for (const auto& row : lp.a) {
    if (row.size() != lp.cols()) throw InputError("LP matrix column count mismatch");
  }
}

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += u[i] * v[i];
  return total;
}

}  // namespace

SimplexResult maximize_packing(const DenseLp& lp) {
  check_shape(lp);
  for (const auto& value : lp.b) {
    if (value < 0) throw InputError("maximize_packing needs a nonnegative right-hand side");
  }
  Tableau tableau(lp.a, lp.b, lp.c);
  for (;;) {
    // Bland: lowest-index improving column, then lowest basic index among
    // the tied ratio rows.
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < tableau.column_count(); ++j) {
      if (tableau.reduced(j) > 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < tableau.row_count(); ++i) {
      const Rational& coefficient = tableau.entry(i, *entering);
      if (coefficient <= 0) continue;
      const Rational ratio = tableau.rhs(i) / coefficient;
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && tableau.basic(i) < tableau.basic(*leaving))) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) throw InternalError("packing LP is unbounded");
    tableau.pivot(*leaving, *entering);
  }
  SimplexResult result;
  result.primal = tableau.basic_solution();
  result.dual = tableau.row_multipliers();
  result.objective = dot(lp.c, result.primal);
  result.pivots = tableau.pivots();
  return result;
}

SimplexResult minimize_covering(const DenseLp& lp) {
  check_shape(lp);
  for (const auto& value : lp.c) {
    if (value < 0) throw InputError("minimize_covering needs a nonnegative objective");
  }
  // max -c.y  s.t.  -A y <= -b: the slack basis is dual feasible.
  std::vector<std::vector<Rational>> negated(lp.a);
  for (auto& row : negated) {
    for (auto& value : row) value = -value;
  }
  std::vector<Rational> rhs(lp.b);
  for (auto& value : rhs) value = -value;
  std::vector<Rational> objective(lp.c);
  for (auto& value : objective) value = -value;

  Tableau tableau(negated, rhs, objective);
  for (;;) {
    std::optional<std::size_t> leaving;
    for (std::size_t i = 0; i < tableau.row_count(); ++i) {
      if (tableau.rhs(i) < 0 && (!leaving || tableau.basic(i) < tableau.basic(*leaving))) {
        leaving = i;
      }
    }
    if (!leaving) break;
    std::optional<std::size_t> entering;
    Rational best_ratio;
    for (std::size_t j = 0; j < tableau.column_count(); ++j) {
      const Rational& coefficient = tableau.entry(*leaving, j);
      if (coefficient >= 0) continue;
      const Rational ratio = tableau.reduced(j) / coefficient;
      if (!entering || ratio < best_ratio) {
        entering = j;
        best_ratio = ratio;
      }
    }
    if (!entering) throw InternalError("covering LP is infeasible");
    tableau.pivot(*leaving, *entering);
  }
  SimplexResult result;
  result.primal = tableau.basic_solution();
  result.dual = tableau.row_multipliers();
  result.objective = dot(lp.c, result.primal);
  result.pivots = tableau.pivots();
  return result;
}

}  // namespace ballcover
