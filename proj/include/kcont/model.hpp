#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kcont {

/// Constants of the problem -d2/dx2(g(|u'|_2^2) u + u^r) = a u + b u^p on (0,1).
struct ProblemParams {
  double a = 1.0;  // linear coefficient, > 0
  double b = 0.0;  // superlinear coefficient, any sign
  double p = 2.0;  // exponent > 1
  double r = 2.0;  // exponent > 1
};

/// Closed catalogue of diffusion nonlinearities g: [0,inf) -> [0,inf).
///
/// Families:
///   Constant(g0)        g(s) = g0
///   Saturating(alpha,beta)  g(s) = alpha + beta*s/(1+s)
///   Decaying(alpha)     g(s) = alpha/(1+s)
///   TableLinear(knots)  piecewise linear through (s_k, v_k), constant
///                       extrapolation beyond the first/last knot
class GFunction {
 public:
  enum class Family { Constant, Saturating, Decaying, TableLinear };

  static GFunction constant(double g0);
  static GFunction saturating(double alpha, double beta);
  static GFunction decaying(double alpha);
  static GFunction table(std::vector<std::pair<double, double>> knots);

  Family family() const { return family_; }
  double g0() const { return g0_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }

  /// g(s); throws std::domain_error for s < 0.
  double eval(double s) const;

  /// dg/ds at s (right derivative at table knots).
  double derivative(double s) const;

  /// Range of g over [0,inf) as an interval with open/closed ends.
  struct Range {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = true;
    bool hi_closed = true;
    bool contains(double t) const;
    std::string str() const;
  };
  Range range() const;

  /// Smallest s >= 0 with g(s) = t, if t lies in the range.
  std::optional<double> invert(double t) const;

  /// Hypothesis (g1): inf_{s>0} g(s) > 0.
  bool satisfies_g1() const;
  /// Hypothesis (g2): bounded with g(0) > 0.
  bool satisfies_g2() const;
  /// inf_{s>0} g(s).
  double inf_value() const;
  /// List of parameter violations (empty when the family invariants hold).
  std::vector<std::string> invariant_violations() const;

  std::string family_name() const;

 private:
  Family family_ = Family::Constant;
  double g0_ = 1.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::vector<std::pair<double, double>> knots_;
};

/// Residual / convergence thresholds shared across the solvers.
struct ToleranceSettings {
  double newton_tol = 1e-10;    // residual sup-norm for (Pa2) solves
  double qmap_tol = 1e-12;      // guaranteed relative tolerance of q_lambda
  double bisection_tol = 1e-8;  // bracket width / |h| target for h-roots
  double eig_tol = 1e-12;       // eigen-residual scale (relative to ||A||)
};

/// Outcome of validate_params: violations as data, never an exception.
struct ValidationOutcome {
  bool ok = true;
  std::vector<std::string> violations;
  bool g1 = false;
  bool g2 = false;
  /// Theorem regimes the scenario can invoke, e.g. "A(i)", "B(ii)", "C".
  std::vector<std::string> regimes;
  double lambda1_used = 0.0;

  bool has_regime(const std::string& tag) const;
};

/// Checks the type invariants of (params, g) and classifies which theorem
/// hypotheses the scenario can invoke. lambda1 defaults to the analytic
/// first Dirichlet eigenvalue pi^2 of the unit interval; pass the discrete
/// eigenvalue to classify against the mesh actually used.
ValidationOutcome validate_params(const ProblemParams& params, const GFunction& g,
                                  double lambda1 = 0.0);

/// g(s) for a catalogue member; negative s is a domain error.
double g_eval(const GFunction& g, double s);

}  // namespace kcont
