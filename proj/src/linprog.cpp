#include "conecurve/linprog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace conecurve::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;

// Run Bland-rule simplex on a tableau whose last row is the (reduced) cost
// row and last column the right-hand side. `basis[r]` is the basic column
// of row r. `ncols` counts structural columns only.
void iterate(Mat& T, std::vector<int>& basis, int ncols) {
  const int m = static_cast<int>(T.rows()) - 1;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (T(m, j) < -kCostTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return; // optimal
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = T(r, enter);
      if (a > kPivotTol) {
        const double ratio = T(r, ncols) / a;
        if (ratio < best_ratio - 1e-15 ||
            (ratio < best_ratio + 1e-15 && (leave < 0 || basis[r] < basis[leave]))) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("simplex: unbounded pivot column");
    // Pivot on (leave, enter).
    T.row(leave) /= T(leave, enter);
    for (int r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = T(r, enter);
      if (f != 0.0) T.row(r) -= f * T.row(leave);
    }
    basis[leave] = enter;
  }
}

} // namespace

Result solve(const Mat& A_in, const Vec& b_in, const Vec& c) {
  const int m = static_cast<int>(A_in.rows());
  const int n = static_cast<int>(A_in.cols());
  if (b_in.size() != m || c.size() != n) throw std::invalid_argument("lp::solve: shape mismatch");

  // Row equilibration, with signs flipped so b >= 0.
  Mat A = A_in;
  Vec b = b_in;
  for (int r = 0; r < m; ++r) {
    double s = std::max(A.row(r).cwiseAbs().maxCoeff(), std::abs(b(r)));
    if (s < kPivotTol) s = 1.0;
    A.row(r) /= s;
    b(r) /= s;
    if (b(r) < 0) {
      A.row(r) = -A.row(r);
      b(r) = -b(r);
    }
  }

  // Phase one: artificial basis.
  Mat T = Mat::Zero(m + 1, n + m + 1);
  T.block(0, 0, m, n) = A;
  T.block(0, n, m, m) = Mat::Identity(m, m);
  T.col(n + m).head(m) = b;
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = n + r;
  for (int r = 0; r < m; ++r) T.row(m) -= T.row(r); // cost = sum of artificials
  iterate(T, basis, n + m);

  const double phase1 = -T(m, n + m);
  if (phase1 > 1e-8) return {Status::infeasible, 0.0, Vec(), {}};

  // Drive remaining artificials out of the basis, dropping rows that are
  // redundant in the original system.
  std::vector<int> keep_rows;
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) {
      keep_rows.push_back(r);
      continue;
    }
    int piv = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(T(r, j)) > 1e-9) {
        piv = j;
        break;
      }
    }
    if (piv < 0) continue; // redundant constraint
    T.row(r) /= T(r, piv);
    for (int rr = 0; rr <= m; ++rr) {
      if (rr == r) continue;
      const double f = T(rr, piv);
      if (f != 0.0) T.row(rr) -= f * T.row(r);
    }
    basis[r] = piv;
    keep_rows.push_back(r);
  }

  // Phase two on the retained rows.
  const int m2 = static_cast<int>(keep_rows.size());
  Mat T2 = Mat::Zero(m2 + 1, n + 1);
  std::vector<int> basis2(m2);
  for (int i = 0; i < m2; ++i) {
    T2.block(i, 0, 1, n) = T.block(keep_rows[i], 0, 1, n);
    T2(i, n) = T(keep_rows[i], n + m);
    basis2[i] = basis[keep_rows[i]];
  }
  for (int j = 0; j < n; ++j) T2(m2, j) = c(j);
  for (int i = 0; i < m2; ++i) T2.row(m2) -= c(basis2[i]) * T2.row(i);
  try {
    iterate(T2, basis2, n);
  } catch (const std::runtime_error&) {
    return {Status::unbounded, -std::numeric_limits<double>::infinity(), Vec(), {}};
  }

  // Refine the vertex from the original system restricted to the basis.
  Mat B(m, m2);
  for (int i = 0; i < m2; ++i) B.col(i) = A_in.col(basis2[i]);
  Vec xb = B.colPivHouseholderQr().solve(b_in);
  Vec x = Vec::Zero(n);
  for (int i = 0; i < m2; ++i) x(basis2[i]) = std::max(0.0, xb(i));

  Result res;
  res.status = Status::optimal;
  res.x = x;
  res.objective = c.dot(x);
  res.basis = basis2;
  return res;
}

bool feasible(const Mat& A, const Vec& b, double tolerance) {
  const int n = static_cast<int>(A.cols());
  Result r = solve(A, b, Vec::Zero(n));
  if (r.status != Status::optimal) return false;
  // Confirm the refined vertex actually satisfies the system.
  const double resid = (A * r.x - b).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  return resid <= tolerance * scale;
}

} // namespace conecurve::lp
