#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hos/sensing.hpp"
#include "hos/types.hpp"

namespace hos {

/// Multi-start steepest descent configuration.  Each start runs an Armijo
/// backtracking line search: trial steps shrink by step_shrink until
///   f(x - a*g) <= f(x) - sufficient_decrease * a * |g|^2.
/// The first line search of a start opens at init_step; afterwards the
/// opening step adapts (doubles after an immediate accept, otherwise reuses
/// the last accepted step).
struct SolverConfig {
  int num_starts = 3;
  int max_iters = 10000;
  double grad_tol = 1e-9;  // stop when |grad|_inf falls below this
  double init_step = 1.0;
  double step_shrink = 0.5;
  double sufficient_decrease = 1e-4;
  double init_scale = 1.0;  // std-dev of the Gaussian starting points
  std::uint64_t seed = 0;
};

struct StartTrace {
  double final_objective = 0.0;
  int iterations = 0;
  bool converged = false;  // gradient tolerance reached
};

struct SolveResult {
  Signal estimate;
  double objective = 0.0;  // recomputed from the estimate on return
  std::vector<StartTrace> starts;
  int chosen_start = 0;  // attains the minimal final objective
};

/// |y - A*M_q(x)|_2^2.
double objective(const Signal& x, const MeasurementOperator& op, const Eigen::VectorXcd& y);

/// Gradient of the objective with respect to the N real entries of x,
/// equal to -2*Re(J^H r) for J the Jacobian of x -> A*M_q(x) and
/// r = y - A*M_q(x), evaluated by adjoint contraction.
Eigen::VectorXd gradient(const Signal& x, const MeasurementOperator& op, const Eigen::VectorXcd& y);

/// Runs num_starts independent descents from i.i.d. N(0, init_scale^2) starts
/// (start i draws from derive_seed(cfg.seed, {i})) and returns the candidate
/// with the smallest final objective.  A start whose objective or gradient
/// turns non-finite is abandoned; the remaining starts proceed.
SolveResult solve(const MeasurementOperator& op, const Eigen::VectorXcd& y, int n, int q,
                  const SolverConfig& cfg);

}  // namespace hos
