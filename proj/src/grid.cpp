#include "kcont/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kcont {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_size(const Mesh1D& mesh, const GridFunction& u, const char* who) {
  if (u.size() != mesh.n) throw std::invalid_argument(std::string(who) + ": mesh/length mismatch");
}
}  // namespace

Mesh1D::Mesh1D(int interior_nodes) : n(interior_nodes), h(1.0 / (interior_nodes + 1)) {
  if (interior_nodes < 1) throw std::invalid_argument("Mesh1D: need at least one interior node");
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::min_value() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::min(m, v);
  return m;
}

GridFunction apply_laplacian(const Mesh1D& mesh, const GridFunction& u) {
  check_size(mesh, u, "apply_laplacian");
  const int n = mesh.n;
  const double inv_h2 = 1.0 / (mesh.h * mesh.h);
  GridFunction v(n);
  for (int i = 0; i < n; ++i) {
    const double left = i > 0 ? u[i - 1] : 0.0;
    const double right = i < n - 1 ? u[i + 1] : 0.0;
    v[i] = (-left + 2.0 * u[i] - right) * inv_h2;
  }
  return v;
}

Tridiagonal laplacian_matrix(const Mesh1D& mesh) {
  const int n = mesh.n;
  const double inv_h2 = 1.0 / (mesh.h * mesh.h);
  Tridiagonal t;
  t.diag.assign(n, 2.0 * inv_h2);
  t.lower.assign(n - 1, -inv_h2);
  t.upper.assign(n - 1, -inv_h2);
  return t;
}

GridFunction solve_poisson(const Mesh1D& mesh, const GridFunction& rhs) {
  check_size(mesh, rhs, "solve_poisson");
  auto x = solve_tridiagonal(laplacian_matrix(mesh), rhs.values, 0.0);
  if (!x) throw std::runtime_error("solve_poisson: elimination failed");
  GridFunction u;
  u.values = std::move(*x);
  return u;
}

double discrete_lambda1(int n) {
  const double h = 1.0 / (n + 1);
  return 2.0 / (h * h) * (1.0 - std::cos(kPi * h));
}

double grad_norm_sq(const Mesh1D& mesh, const GridFunction& u) {
  check_size(mesh, u, "grad_norm_sq");
  const int n = mesh.n;
  double sum = 0.0;
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = u[i] - prev;
    sum += d * d;
    prev = u[i];
  }
  sum += prev * prev;  // last cell down to the boundary zero
  return sum / mesh.h;
}

double weighted_inner(const Mesh1D& mesh, const GridFunction& u, const GridFunction& v,
                      const GridFunction& w) {
  check_size(mesh, u, "weighted_inner");
  check_size(mesh, v, "weighted_inner");
  check_size(mesh, w, "weighted_inner");
  double sum = 0.0;
  for (int i = 0; i < mesh.n; ++i) sum += u[i] * v[i] * w[i];
  return sum * mesh.h;
}

double dot_h(const Mesh1D& mesh, const GridFunction& u, const GridFunction& v) {
  check_size(mesh, u, "dot_h");
  check_size(mesh, v, "dot_h");
  double sum = 0.0;
  for (int i = 0; i < mesh.n; ++i) sum += u[i] * v[i];
  return sum * mesh.h;
}

namespace {
// u'A u via first differences: algebraically equal to sum u_i (Au)_i but free
// of the stencil's cancellation, so the Rayleigh quotient keeps ~1e-14
// relative accuracy at fine meshes.
double energy(const Mesh1D& mesh, const GridFunction& u) {
  const int n = mesh.n;
  double sum = 0.0, prev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = u[i] - prev;
    sum += d * d;
    prev = u[i];
  }
  sum += prev * prev;
  return sum / (mesh.h * mesh.h);
}
}  // namespace

EigenPair principal_eigenpair(const Mesh1D& mesh, double eig_tol) {
  const int n = mesh.n;
  GridFunction v(n, 1.0);
  double lambda = 0.0, lambda_prev = -1.0;
  for (int iter = 0; iter < 400; ++iter) {
    v = solve_poisson(mesh, v);
    double sup = v.sup_norm();
    if (sup == 0.0) throw std::runtime_error("principal_eigenpair: iteration collapsed");
    for (double& x : v.values) x /= sup;
    double vv = 0.0;
    for (double x : v.values) vv += x * x;
    lambda = energy(mesh, v) / vv;
    if (iter > 3 && std::abs(lambda - lambda_prev) <= 1e-15 * lambda) break;
    lambda_prev = lambda;
    if (iter == 399) throw std::runtime_error("principal_eigenpair: iteration cap exceeded");
  }
  // Positive orientation and sup normalization.
  double mx = 0.0;
  for (double x : v.values)
    if (std::abs(x) > std::abs(mx)) mx = x;
  for (double& x : v.values) x /= mx;
  // Residual check scaled by the operator norm (the stencil itself carries
  // ~eps*4/h^2 of rounding, so an absolute eig_tol is not meaningful).
  const GridFunction av = apply_laplacian(mesh, v);
  double res = 0.0;
  for (int i = 0; i < n; ++i) res = std::max(res, std::abs(av[i] - lambda * v[i]));
  if (res > eig_tol * 4.0 / (mesh.h * mesh.h))
    throw std::runtime_error("principal_eigenpair: residual above tolerance");
  EigenPair out;
  out.lambda1 = lambda;
  out.phi1 = std::move(v);
  return out;
}

}  // namespace kcont
