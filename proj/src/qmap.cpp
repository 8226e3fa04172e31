#include "kcont/qmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kcont {

double power(double x, double e) {
  if (e == 2.0) return x * x;
  if (e == 3.0) return x * x * x;
  if (e == 1.0) return x;
  if (e == 1.5) return x * std::sqrt(x);
  if (e == 0.5) return std::sqrt(x);
  return std::pow(x, e);
}

ChangeOfVariables::ChangeOfVariables(double lambda_, double r_) : lambda(lambda_), r(r_) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("ChangeOfVariables: lambda must be positive and finite");
  if (!(r > 1.0) || !std::isfinite(r))
    throw std::invalid_argument("ChangeOfVariables: r must exceed 1");
}

double i_lambda(const ChangeOfVariables& cv, double s) {
  if (s < 0.0) throw std::domain_error("i_lambda: s < 0");
  return s / cv.lambda + power(s, cv.r);
}

double q_lambda(const ChangeOfVariables& cv, double w) {
  if (w < 0.0) throw std::domain_error("q_lambda: w < 0");
  if (w == 0.0) return 0.0;

  const double lambda = cv.lambda;
  const double r = cv.r;
  // u <= min(lambda*w, w^{1/r}) since both terms of I are <= w at the root.
  double hi = std::min(lambda * w, power(w, 1.0 / r));
  double lo = 0.0;
  // Guard against the bound rounding below the root.
  for (int k = 0; k < 8 && hi / lambda + power(hi, r) < w; ++k) hi *= 1.0 + 1e-12;

  double u = hi;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 300; ++iter) {
    const double pr = power(u, r);
    const double fval = u / lambda + pr - w;
    if (std::abs(fval) <= 2.0 * eps * (w + u / lambda + pr)) return u;
    if (fval > 0.0)
      hi = u;
    else
      lo = u;
    const double deriv = 1.0 / lambda + r * power(u, r - 1.0);
    double next = u - fval / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == u) return u;
    u = next;
  }
  // The scalar map is smooth and strictly monotone; reaching this point with a
  // large residual indicates a bug, not an input problem.
  const double fval = u / cv.lambda + power(u, cv.r) - w;
  if (std::abs(fval) > 1e-12 * (1.0 + w))
    throw std::runtime_error("q_lambda: inversion did not converge");
  return u;
}

double q_prime_from_u(const ChangeOfVariables& cv, double u) {
  return 1.0 / (1.0 / cv.lambda + cv.r * power(u, cv.r - 1.0));
}

double q_prime(const ChangeOfVariables& cv, double w) {
  if (w <= 0.0) throw std::domain_error("q_prime: w <= 0 (the limit at 0 is lambda)");
  return q_prime_from_u(cv, q_lambda(cv, w));
}

double dq_dlambda(const ChangeOfVariables& cv, double w) {
  if (w < 0.0) throw std::domain_error("dq_dlambda: w < 0");
  if (w == 0.0) return 0.0;
  const double u = q_lambda(cv, w);
  return u / (cv.lambda * cv.lambda) * q_prime_from_u(cv, u);
}

double f_eval(const ChangeOfVariables& cv, const ProblemParams& params, double s) {
  if (s < 0.0) throw std::domain_error("f_eval: s < 0");
  if (cv.r != params.r) throw std::invalid_argument("f_eval: cv.r != params.r");
  const double u = q_lambda(cv, s);
  return params.a * u + params.b * power(u, params.p);
}

double f_prime(const ChangeOfVariables& cv, const ProblemParams& params, double s) {
  if (s < 0.0) throw std::domain_error("f_prime: s < 0");
  if (cv.r != params.r) throw std::invalid_argument("f_prime: cv.r != params.r");
  if (s == 0.0) return params.a * cv.lambda;  // linearization slope at the trivial state
  const double u = q_lambda(cv, s);
  return (params.a + params.b * params.p * power(u, params.p - 1.0)) * q_prime_from_u(cv, u);
}

double df_dlambda(const ChangeOfVariables& cv, const ProblemParams& params, double s) {
  if (s < 0.0) throw std::domain_error("df_dlambda: s < 0");
  if (s == 0.0) return 0.0;
  const double u = q_lambda(cv, s);
  const double du = u / (cv.lambda * cv.lambda) * q_prime_from_u(cv, u);
  return (params.a + params.b * params.p * power(u, params.p - 1.0)) * du;
}

double phi_eval(double lambda1, const ProblemParams& params, double s) {
  if (s == 0.0) return 0.0;
  return lambda1 * power(s, params.r - 1.0) - params.b * power(s, params.p - 1.0);
}

PhiExtremum phi_smax(double lambda1, const ProblemParams& params) {
  if (!(params.b > 0.0)) throw std::domain_error("phi_smax: requires b > 0");
  const double d = params.r - params.p;
  if (std::abs(d) <= 1e-12 * std::max(params.r, params.p))
    throw std::domain_error("phi_smax: degenerate exponents r = p");
  const double s0 =
      std::pow(params.b * (params.p - 1.0) / (lambda1 * (params.r - 1.0)), 1.0 / d);
  const double phi_s0 = std::pow((params.p - 1.0) / lambda1, (params.p - 1.0) / d) *
                        std::pow(params.b / (params.r - 1.0), (params.r - 1.0) / d) *
                        (params.p - params.r);
  return {s0, phi_s0};
}

}  // namespace kcont
