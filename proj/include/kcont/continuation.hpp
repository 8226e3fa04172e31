#pragma once

#include <string>
#include <vector>

#include "kcont/pa2.hpp"

namespace kcont {

struct ContinuationSettings {
  double seed_eps = 1e-3;
  double ds_init = 1e-3;
  double ds_min = 1e-6;
  double ds_max = 0.1;
  int max_steps = 5000;
  double norm_cap = 1e3;
};

struct LambdaWindow {
  double min = 0.0;
  double max = 0.0;
};

/// One solution of (Pa2) on the traced continuum, with the u = q_lambda(w)
/// annotation filled by transform_branch.
struct BranchPoint {
  double lambda = 0.0;
  GridFunction w;
  GridFunction u;
  double w_sup = 0.0;
  double u_sup = 0.0;
  double grad_u_sq = 0.0;
  double arclength = 0.0;
  int index = 0;
};

enum class StopReason { LambdaWindow, NormCap, StepCap, SolverFailure };
enum class BranchDirection { Supercritical, Subcritical };

const char* to_string(StopReason s);
const char* to_string(BranchDirection d);

struct Branch {
  std::vector<BranchPoint> points;
  double bifurcation_lambda = 0.0;
  BranchDirection direction = BranchDirection::Supercritical;
  std::vector<int> folds;  // indices where the lambda-tangent changes sign
  StopReason stop_reason = StopReason::LambdaWindow;
  bool annotated = false;  // u fields filled
};

/// Failure of the seed or a probe corrector.
class SolverError : public std::exception {
 public:
  explicit SolverError(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }

 private:
  std::string msg_;
};

struct SeedPoint {
  double lambda = 0.0;
  GridFunction w;
};

/// Corrected point on the branch near the bifurcation at lambda1/a:
/// w ~= eps*phi1 pinned at amplitude eps, lambda free. Throws SolverError
/// when the corrector fails (eps too large).
SeedPoint bifurcation_seed(const Mesh1D& mesh, const ProblemParams& params,
                           const EigenPair& eig, double eps,
                           const ToleranceSettings& tols);

/// Pseudo-arclength trace of the positive-solution continuum of (Pa2) from
/// the bifurcation point. Secant predictor, bordered Newton corrector,
/// adaptive step; fills the u-annotation on every accepted point.
Branch trace_branch(const Mesh1D& mesh, const ProblemParams& params,
                    const EigenPair& eig, const ContinuationSettings& settings,
                    const LambdaWindow& window, const ToleranceSettings& tols);

/// Fills u = q_lambda(w), u_sup and grad_u_sq for every point; idempotent.
void transform_branch(const Mesh1D& mesh, const ProblemParams& params, Branch& branch,
                      const ToleranceSettings& tols);

/// Internal correctors, exposed for the h-root refinement.
namespace detail {

struct ExtendedState {
  GridFunction w;
  double lambda = 0.0;
};

/// Weighted product h*sum(dw1*dw2) + dl1*dl2 used for tangents and steps.
double state_dot(const Mesh1D& mesh, const GridFunction& w1, double l1,
                 const GridFunction& w2, double l2);

/// Newton on {residual_pa2 = 0, w[pin] = amplitude}; false on failure.
bool correct_fixed_amplitude(const Mesh1D& mesh, const ProblemParams& params,
                             const ToleranceSettings& tols, int pin_index,
                             double amplitude, ExtendedState& y, int max_iter = 40);

/// Newton on {residual_pa2 = 0, <tangent, y - y_ref> = 0}; false on failure.
bool correct_arclength(const Mesh1D& mesh, const ProblemParams& params,
                       const ToleranceSettings& tols, const GridFunction& tan_w,
                       double tan_lambda, const ExtendedState& y_ref,
                       ExtendedState& y, int max_iter = 20);

}  // namespace detail

}  // namespace kcont
