#pragma once

#include <optional>
#include <vector>

namespace kcont {

/// Tridiagonal matrix: diag[i] = (i,i), lower[i] = (i+1,i), upper[i] = (i,i+1).
struct Tridiagonal {
  std::vector<double> lower;  // size n-1
  std::vector<double> diag;   // size n
  std::vector<double> upper;  // size n-1
  int n() const { return static_cast<int>(diag.size()); }
};

/// Thomas elimination. Returns nullopt on a (near-)zero pivot; callers fall
/// back to the dense bordered path in that case.
std::optional<std::vector<double>> solve_tridiagonal(const Tridiagonal& t,
                                                     const std::vector<double>& rhs,
                                                     double pivot_floor_rel = 1e-14);

/// Solution of the bordered system
///   [ T   col ] [x ]   [rhs ]
///   [ row  corner ] [xb] = [rhs_b]
/// via Keller bordering (two tridiagonal solves) with a partial-pivot dense
/// fall-back when T is near singular (turning points).
struct BorderedSolution {
  std::vector<double> x;
  double xb = 0.0;
};
std::optional<BorderedSolution> solve_bordered(const Tridiagonal& t,
                                               const std::vector<double>& col,
                                               const std::vector<double>& row,
                                               double corner,
                                               const std::vector<double>& rhs,
                                               double rhs_b);

}  // namespace kcont
