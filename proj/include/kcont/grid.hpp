#pragma once

#include <vector>

#include "kcont/linalg.hpp"

namespace kcont {

/// Uniform mesh on (0,1) with n interior nodes, h = 1/(n+1), x_i = (i+1)h.
struct Mesh1D {
  int n;
  double h;
  explicit Mesh1D(int interior_nodes);
  double node(int i) const { return (i + 1) * h; }
};

/// Values on the interior nodes; homogeneous Dirichlet values are implicit.
struct GridFunction {
  std::vector<double> values;

  GridFunction() = default;
  explicit GridFunction(int n, double fill = 0.0) : values(n, fill) {}

  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int i) { return values[i]; }
  double operator[](int i) const { return values[i]; }

  double sup_norm() const;
  double min_value() const;
};

/// Principal Dirichlet eigenpair of -d2/dx2 on the mesh, sup-normalized.
struct EigenPair {
  double lambda1 = 0.0;
  GridFunction phi1;
};

/// v_i = (-u_{i-1} + 2 u_i - u_{i+1})/h^2 with u_0 = u_{n+1} = 0.
GridFunction apply_laplacian(const Mesh1D& mesh, const GridFunction& u);

/// Direct tridiagonal solve of apply_laplacian(u) = rhs.
GridFunction solve_poisson(const Mesh1D& mesh, const GridFunction& rhs);

/// The operator of apply_laplacian as a tridiagonal matrix.
Tridiagonal laplacian_matrix(const Mesh1D& mesh);

/// Closed-form smallest eigenvalue of the 3-point stencil: (2/h^2)(1-cos(pi h)).
double discrete_lambda1(int n);

/// Smallest eigenpair by inverse power iteration; the eigenvalue is evaluated
/// with the first-difference energy Rayleigh quotient, which is exact in
/// rational arithmetic and avoids the stencil's cancellation.
EigenPair principal_eigenpair(const Mesh1D& mesh, double eig_tol = 1e-12);

/// |u'|_2^2 by forward differences: sum_{i=0..n} ((u_{i+1}-u_i)/h)^2 h.
double grad_norm_sq(const Mesh1D& mesh, const GridFunction& u);

/// sum_i u_i v_i w_i h over interior nodes.
double weighted_inner(const Mesh1D& mesh, const GridFunction& u,
                      const GridFunction& v, const GridFunction& w);

/// sum_i u_i v_i h.
double dot_h(const Mesh1D& mesh, const GridFunction& u, const GridFunction& v);

}  // namespace kcont
