#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcont/continuation.hpp"
#include "kcont/model.hpp"

namespace kcont {

/// h(lambda, u) = 1/lambda - g(|u'|_2^2); zeros along the branch solve the
/// original nonlocal problem.
double h_eval(double lambda, double grad_u_sq_value, const GFunction& g);

/// A solution of the original problem assembled from a zero of h.
struct P1Solution {
  GridFunction u;
  double lambda_star = 0.0;
  double gamma = 0.0;  // |u'|_2^2
  double h_value = 0.0;
  double residual_sup = 0.0;
  double arclength = 0.0;
  std::string regime;
  bool resolved = true;  // |h| <= bisection_tol achieved
};

/// Sup-norm of apply_laplacian(g(gamma) u + u^r) - (a u + b u^p) with
/// gamma = grad_norm_sq(u). Independent of the branch machinery.
double p1_residual(const Mesh1D& mesh, const GridFunction& u, const GFunction& g,
                   const ProblemParams& params);

/// Locates every sign change of h along the annotated branch (including the
/// trivial seed limit with gamma = 0), refines each by arclength bisection
/// with full re-correction onto the branch, then polishes with a bordered
/// Newton on {residual = 0, h = 0}. Unresolved roots are reported flagged.
std::vector<P1Solution> find_h_roots(const Mesh1D& mesh, const ProblemParams& params,
                                     const GFunction& g, const EigenPair& eig,
                                     const Branch& branch, const ToleranceSettings& tols,
                                     const std::string& regime_label = "");

/// Wrong regime for the closed-form machinery (requires r = p < 2, b = lambda1h).
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// u_c = q_{lambda1h/a}(c phi1) nodewise; the closed-form ray of the r = p,
/// b = lambda1 case. Requires r = p and b = lambda1h.
GridFunction closed_form_solution(const Mesh1D& mesh, const EigenPair& eig,
                                  const ProblemParams& params, double c,
                                  const ToleranceSettings& tols);

/// Quadrature of (c lambda1 / (a + lambda1 r u_c^{r-1}))^2 |phi1'|^2 over the
/// mesh cells; agrees with grad_norm_sq(closed_form_solution(c)) to O(h).
/// Requires r = p < 2 and b = lambda1h.
double grad_norm_c(const Mesh1D& mesh, const EigenPair& eig,
                   const ProblemParams& params, double c,
                   const ToleranceSettings& tols);

struct TheoremCResult {
  std::optional<P1Solution> solution;
  GFunction::Range range;        // computed R[g]
  double target = 0.0;           // a / lambda1h
  double s_target = 0.0;         // s' with g(s') = target (when solvable)
  double c_star = 0.0;           // matched amplitude
  bool degenerate = false;       // constant g: canonical s' = 1
  bool near_boundary = false;    // target within 1e-8 of an open range end
};

/// Existence machinery of the r = p < 2, b = lambda1 regime: solvable iff
/// a/lambda1h lies in R[g]; matches |u_c'|_2^2 = s' by bisection on the
/// increasing amplitude map. Throws RegimeError outside the regime.
TheoremCResult theorem_c_solve(const Mesh1D& mesh, const EigenPair& eig,
                               const ProblemParams& params, const GFunction& g,
                               const ToleranceSettings& tols);

}  // namespace kcont
