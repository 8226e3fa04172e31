#pragma once

#include "kcont/grid.hpp"
#include "kcont/model.hpp"
#include "kcont/qmap.hpp"

namespace kcont {

/// residual of the transformed problem: apply_laplacian(w) - f(lambda, w)
/// evaluated nodewise. Entries of w must be >= 0.
GridFunction residual_pa2(const Mesh1D& mesh, const ChangeOfVariables& cv,
                          const ProblemParams& params, const GridFunction& w);

/// f(lambda, w_i), f'(lambda, w_i) and u_i = q_lambda(w_i) in one pass.
struct NodewiseF {
  GridFunction f;
  GridFunction fprime;
  GridFunction u;
};
NodewiseF eval_f_nodewise(const ChangeOfVariables& cv, const ProblemParams& params,
                          const GridFunction& w);

enum class Pa2Status {
  Converged,
  ConvergedToTrivial,  // ||w|| below the positive-solution floor
  NonPositive,         // converged but some interior node at/below the floor
  SingularJacobian,
  NoDecrease,
  IterationCap,
};

const char* to_string(Pa2Status s);

struct Pa2Result {
  Pa2Status status = Pa2Status::IterationCap;
  GridFunction w;
  double residual_sup = 0.0;
  int iterations = 0;
};

/// Damped Newton for -w'' = f(lambda, w) at fixed lambda. Iterates are
/// clamped to the nonnegative cone; backtracking alpha in {1, 1/2, ..., 1/64}.
Pa2Result newton_solve_pa2(const Mesh1D& mesh, const ChangeOfVariables& cv,
                           const ProblemParams& params, const GridFunction& guess,
                           const ToleranceSettings& tols, int max_iter = 60);

/// Independent cross-check: the fixed-point iteration w <- (-Lap)^{-1} f(lambda, w).
/// Converges in the sublinear regimes; used as an oracle against the Newton path.
Pa2Result fixed_point_solve_pa2(const Mesh1D& mesh, const ChangeOfVariables& cv,
                                const ProblemParams& params, const GridFunction& guess,
                                const ToleranceSettings& tols, int max_iter = 20000);

}  // namespace kcont
