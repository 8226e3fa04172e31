#pragma once

#include <string>
#include <vector>

#include "kcont/continuation.hpp"
#include "kcont/model.hpp"

namespace kcont {

enum class AuditStatus { Pass, Fail, Skipped, NotApplicable };

const char* to_string(AuditStatus s);

struct AuditCheck {
  std::string name;
  std::string clause;
  AuditStatus status = AuditStatus::Pass;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool passed() const;
  void append(const AuditReport& other);
};

/// |sum_i u_i phi1_i (lambda1h u_i^{r-1} - b u_i^{p-1} - (a - lambda1h/lambda)) h|.
/// Near zero for genuine discrete solutions of (P_lambda).
double integral_identity_residual(const Mesh1D& mesh, const EigenPair& eig,
                                  const ProblemParams& params, double lambda,
                                  const GridFunction& u);

/// Classifies whether (lambda, ||u||) lies in a region the necessary
/// conditions forbid; a Fail on a converged solution is a hard audit failure.
AuditReport necessary_conditions(const ProblemParams& params, double lambda,
                                 double u_sup, double lambda1);

/// A priori bounds along a traced, annotated branch: the b < 0 sup bounds and
/// the b > 0, r != p small-norm exclusion thresholds.
AuditReport apriori_bounds(const ProblemParams& params, const Branch& branch,
                           double lambda1);

/// Full branch audit: per-point identity residual, per-point necessary
/// conditions and the a priori bounds.
AuditReport audit_branch(const Mesh1D& mesh, const EigenPair& eig,
                         const ProblemParams& params, const Branch& branch,
                         const ToleranceSettings& tols);

}  // namespace kcont
