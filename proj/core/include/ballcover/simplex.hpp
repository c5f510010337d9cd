#pragma once

#include <cstddef>
#include <vector>

#include "ballcover/rational.hpp"

namespace ballcover {

// Dense LP data: constraint matrix (rows x cols), right-hand side per row,
// objective per column.
struct DenseLp {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;

  std::size_t rows() const { return b.size(); }
  std::size_t cols() const { return c.size(); }
};

struct SimplexResult {
  std::vector<Rational> primal;  // one per column
  std::vector<Rational> dual;    // one per row
  Rational objective;
  std::size_t pivots = 0;
};

// max c.x  s.t.  A x <= b, x >= 0, requiring b >= 0 (the slack basis is
// feasible). Primal simplex with Bland's rule; `dual` holds the optimal
// multipliers of the rows. Throws InternalError if unbounded.
SimplexResult maximize_packing(const DenseLp& lp);

// min c.y  s.t.  A y >= b, y >= 0, requiring c >= 0 (the slack basis is dual
// feasible). Dual simplex with smallest-index choices; `dual` holds the
// optimal multipliers of the rows. Throws InternalError if infeasible.
SimplexResult minimize_covering(const DenseLp& lp);

}  // namespace ballcover
