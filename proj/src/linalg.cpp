#include "kcont/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace kcont {

std::optional<std::vector<double>> solve_tridiagonal(const Tridiagonal& t,
                                                     const std::vector<double>& rhs,
                                                     double pivot_floor_rel) {
  const int n = t.n();
  double scale = 0.0;
  for (double d : t.diag) scale = std::max(scale, std::abs(d));
  for (double d : t.upper) scale = std::max(scale, std::abs(d));
  for (double d : t.lower) scale = std::max(scale, std::abs(d));
  if (scale == 0.0) return std::nullopt;
  const double floor = pivot_floor_rel * scale;

  std::vector<double> c(n, 0.0), x(n, 0.0);
  double piv = t.diag[0];
  if (std::abs(piv) <= floor) return std::nullopt;
  c[0] = n > 1 ? t.upper[0] / piv : 0.0;
  x[0] = rhs[0] / piv;
  for (int i = 1; i < n; ++i) {
    piv = t.diag[i] - t.lower[i - 1] * c[i - 1];
    if (std::abs(piv) <= floor) return std::nullopt;
    if (i < n - 1) c[i] = t.upper[i] / piv;
    x[i] = (rhs[i] - t.lower[i - 1] * x[i - 1]) / piv;
  }
  for (int i = n - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
  return x;
}

namespace {

// Dense partial-pivot elimination of the full (n+1) bordered system. Only
// engaged when the tridiagonal block is near singular (turning points).
std::optional<BorderedSolution> dense_bordered(const Tridiagonal& t,
                                               const std::vector<double>& col,
                                               const std::vector<double>& row,
                                               double corner,
                                               const std::vector<double>& rhs,
                                               double rhs_b) {
  const int n = t.n();
  const int m = n + 1;
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = t.diag[i];
    if (i > 0) a[i][i - 1] = t.lower[i - 1];
    if (i < n - 1) a[i][i + 1] = t.upper[i];
    a[i][n] = col[i];
    a[i][m] = rhs[i];
  }
  for (int j = 0; j < n; ++j) a[n][j] = row[j];
  a[n][n] = corner;
  a[n][m] = rhs_b;

  for (int k = 0; k < m; ++k) {
    int piv = k;
    for (int i = k + 1; i < m; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (a[piv][k] == 0.0) return std::nullopt;
    std::swap(a[k], a[piv]);
    for (int i = k + 1; i < m; ++i) {
      const double f = a[i][k] / a[k][k];
      if (f == 0.0) continue;
      for (int j = k; j <= m; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<double> sol(m, 0.0);
  for (int i = m - 1; i >= 0; --i) {
    double s = a[i][m];
    for (int j = i + 1; j < m; ++j) s -= a[i][j] * sol[j];
    sol[i] = s / a[i][i];
    if (!std::isfinite(sol[i])) return std::nullopt;
  }
  BorderedSolution out;
  out.x.assign(sol.begin(), sol.begin() + n);
  out.xb = sol[n];
  return out;
}

}  // namespace

std::optional<BorderedSolution> solve_bordered(const Tridiagonal& t,
                                               const std::vector<double>& col,
                                               const std::vector<double>& row,
                                               double corner,
                                               const std::vector<double>& rhs,
                                               double rhs_b) {
  const int n = t.n();
  auto xa = solve_tridiagonal(t, rhs, 1e-12);
  auto xb = xa ? solve_tridiagonal(t, col, 1e-12) : std::nullopt;
  if (xa && xb) {
    double row_xa = 0.0, row_xb = 0.0, row_mag = 0.0, xb_mag = 0.0;
    for (int i = 0; i < n; ++i) {
      row_xa += row[i] * (*xa)[i];
      row_xb += row[i] * (*xb)[i];
      row_mag = std::max(row_mag, std::abs(row[i]));
      xb_mag = std::max(xb_mag, std::abs((*xb)[i]));
    }
    const double denom = corner - row_xb;
    const double denom_scale = std::abs(corner) + row_mag * xb_mag + 1e-300;
    if (std::abs(denom) > 1e-10 * denom_scale) {
      BorderedSolution out;
      out.xb = (rhs_b - row_xa) / denom;
      out.x.resize(n);
      for (int i = 0; i < n; ++i) out.x[i] = (*xa)[i] - out.xb * (*xb)[i];
      bool finite = std::isfinite(out.xb);
      for (double v : out.x) finite = finite && std::isfinite(v);
      if (finite) return out;
    }
  }
  return dense_bordered(t, col, row, corner, rhs, rhs_b);
}

}  // namespace kcont
