#pragma once

#include "kcont/model.hpp"

namespace kcont {

/// The parameter-dependent substitution w = u/lambda + u^r and its inverse.
struct ChangeOfVariables {
  double lambda;
  double r;
  ChangeOfVariables(double lambda_, double r_);
};

/// I_lambda(s) = s/lambda + s^r, strictly increasing on [0,inf).
double i_lambda(const ChangeOfVariables& cv, double s);

/// Inverse of I_lambda: the unique u >= 0 with u/lambda + u^r = w.
/// Safeguarded Newton on the monotone scalar equation; converges to
/// machine precision (qmap_tol is the guaranteed bound).
double q_lambda(const ChangeOfVariables& cv, double w);

/// dq_lambda/dw = 1/(1/lambda + r q(w)^{r-1}) for w > 0.
double q_prime(const ChangeOfVariables& cv, double w);
/// Same, given u = q_lambda(w) already computed.
double q_prime_from_u(const ChangeOfVariables& cv, double u);

/// dq_lambda/dlambda at fixed w: (u/lambda^2) * q'(w).
double dq_dlambda(const ChangeOfVariables& cv, double w);

/// f(lambda, s) = a q_lambda(s) + b q_lambda(s)^p.
double f_eval(const ChangeOfVariables& cv, const ProblemParams& params, double s);

/// df/ds; equals a*lambda at s = 0 (the bifurcation linearization slope).
double f_prime(const ChangeOfVariables& cv, const ProblemParams& params, double s);

/// df/dlambda at fixed s.
double df_dlambda(const ChangeOfVariables& cv, const ProblemParams& params, double s);

/// phi(s) = lambda1 s^{r-1} - b s^{p-1}.
double phi_eval(double lambda1, const ProblemParams& params, double s);

/// Extremum of phi for b > 0, r != p: s0 = (b(p-1)/(lambda1(r-1)))^{1/(r-p)}
/// and phi(s0) by the closed formula (minimum when r > p, maximum when r < p).
struct PhiExtremum {
  double s0;
  double phi_s0;
};
PhiExtremum phi_smax(double lambda1, const ProblemParams& params);

/// x^e with fast paths for the exponents that dominate this code (2, 3, 1.5).
double power(double x, double e);

}  // namespace kcont
