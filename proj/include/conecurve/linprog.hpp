#pragma once

#include "conecurve/geometry.hpp"

#include <vector>

namespace conecurve::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  double objective = 0.0;
  Vec x;
  std::vector<int> basis; // column indices of the final basis
};

/// Dense two-phase simplex for small LPs:  min c^T x  s.t.  A x = b, x >= 0.
/// Bland's rule (no cycling); the optimal vertex is re-solved from the
/// original data through its basis, so results are accurate to machine
/// precision rather than to accumulated tableau error.
Result solve(const Mat& A, const Vec& b, const Vec& c);

/// Feasibility of {x >= 0 : A x = b} (phase one only).
bool feasible(const Mat& A, const Vec& b, double tolerance = 1e-9);

} // namespace conecurve::lp
