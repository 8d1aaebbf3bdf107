#include "hos/solver.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "hos/random.hpp"
#include "hos/spectra.hpp"

namespace hos {

namespace {

constexpr double kMinStep = 1e-20;

// Repeated-evaluation workspace for f(x) = |y - A*M_q(x)|^2 over real x.
// Forward pass caches the DFT, spectrum, and residual of the current point;
// the gradient reuses them through the adjoint chain
//   grad = -2 * Re( F^H (dM/dxhat)^H A^H r ).
class Evaluator {
 public:
  Evaluator(const MeasurementOperator& op, const Eigen::VectorXcd& y)
      : op_(op), y_(y) {
    if (y.size() != op.num_rows) throw ShapeMismatch("measurement length != operator rows");
    const Eigen::MatrixXcd f = dft_matrix(op.n);
    f_re_ = f.real();
    f_im_ = f.imag();
  }

  struct State {
    Eigen::VectorXd x;
    Eigen::VectorXcd xhat;
    Eigen::VectorXcd m;
    Eigen::VectorXcd residual;
    double f = 0.0;
  };

  void forward(State& s) const {
    s.xhat.resize(op_.n);
    s.xhat.real() = f_re_ * s.x;
    s.xhat.imag() = f_im_ * s.x;
    spectrum_from_dft(s.xhat, op_.q, s.m);
    s.residual = y_ - apply(op_, s.m);
    s.f = s.residual.squaredNorm();
  }

  void gradient(const State& s, Eigen::VectorXd& g) const {
    const Eigen::VectorXcd u = apply_adjoint(op_, s.residual);
    spectrum_dft_adjoint(s.xhat, op_.q, u, v_);
    g.noalias() = f_re_.transpose() * v_.real();
    g.noalias() += f_im_.transpose() * v_.imag();
    g *= -2.0;
  }

 private:
  const MeasurementOperator& op_;
  const Eigen::VectorXcd& y_;
  Eigen::MatrixXd f_re_, f_im_;
  mutable Eigen::VectorXcd v_;
};

struct DescentOutcome {
  Eigen::VectorXd x;
  double f = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

DescentOutcome descend(const Evaluator& eval, const Eigen::VectorXd& x0,
                       const SolverConfig& cfg) {
  Evaluator::State cur, trial;
  cur.x = x0;
  eval.forward(cur);
  DescentOutcome out;
  out.x = x0;
  if (!std::isfinite(cur.f)) return out;  // abandoned immediately

  Eigen::VectorXd g(x0.size());
  double opening_step = cfg.init_step;
  for (; out.iterations < cfg.max_iters; ++out.iterations) {
    eval.gradient(cur, g);
    if (!g.allFinite()) break;  // abandon this start, keep the last iterate
    if (g.lpNorm<Eigen::Infinity>() <= cfg.grad_tol) {
      out.converged = true;
      break;
    }
    const double gg = g.squaredNorm();
    double step = opening_step;
    bool accepted = false;
    bool first_trial = true;
    while (step >= kMinStep) {
      trial.x = cur.x - step * g;
      eval.forward(trial);
      if (std::isfinite(trial.f) &&
          trial.f <= cur.f - cfg.sufficient_decrease * step * gg) {
        accepted = true;
        break;
      }
      step *= cfg.step_shrink;
      first_trial = false;
    }
    if (!accepted) break;  // no representable step decreases f any further
    std::swap(cur, trial);
    opening_step = first_trial ? step * 2.0 : step;
  }

  out.x = cur.x;
  out.f = cur.f;
  return out;
}

void check_config(const SolverConfig& cfg) {
  if (cfg.num_starts < 1) throw InvalidArgument("solver needs at least one start");
  if (cfg.grad_tol <= 0 || cfg.init_step <= 0 || cfg.sufficient_decrease <= 0)
    throw InvalidArgument("solver tolerances must be positive");
  if (cfg.step_shrink <= 0 || cfg.step_shrink >= 1)
    throw InvalidArgument("step shrink factor must lie in (0, 1)");
}

}  // namespace

double objective(const Signal& x, const MeasurementOperator& op, const Eigen::VectorXcd& y) {
  if (y.size() != op.num_rows) throw ShapeMismatch("measurement length != operator rows");
  if (x.size() != op.n) throw ShapeMismatch("signal length != operator N");
  return (y - apply(op, spectrum(x, op.q, op.num_cols).entries)).squaredNorm();
}

Eigen::VectorXd gradient(const Signal& x, const MeasurementOperator& op,
                         const Eigen::VectorXcd& y) {
  if (x.size() != op.n) throw ShapeMismatch("signal length != operator N");
  if (x.domain != Domain::Real)
    throw InvalidArgument("gradient is defined over real signals only");
  Evaluator eval(op, y);
  Evaluator::State s;
  s.x = x.values.real();
  eval.forward(s);
  Eigen::VectorXd g(op.n);
  eval.gradient(s, g);
  return g;
}

SolveResult solve(const MeasurementOperator& op, const Eigen::VectorXcd& y, int n, int q,
                  const SolverConfig& cfg) {
  if (op.n != n || op.q != q) throw ShapeMismatch("operator (q, N) != requested (q, N)");
  check_config(cfg);

  Evaluator eval(op, y);
  SolveResult result;
  Eigen::VectorXd best_x;
  double best_f = std::numeric_limits<double>::infinity();
  for (int start = 0; start < cfg.num_starts; ++start) {
    const Eigen::VectorXd x0 =
        cfg.init_scale * gaussian_vector(n, derive_seed(cfg.seed, {static_cast<std::uint64_t>(start)}));
    DescentOutcome outcome = descend(eval, x0, cfg);
    result.starts.push_back({outcome.f, outcome.iterations, outcome.converged});
    if (outcome.f < best_f) {
      best_f = outcome.f;
      best_x = outcome.x;
      result.chosen_start = start;
    }
  }
  if (!best_x.size()) {
    // every start diverged before producing a finite value
    throw NonFiniteObjective("all starts produced non-finite objectives");
  }
  result.estimate = Signal::real(best_x);
  result.objective = objective(result.estimate, op, y);
  return result;
}

}  // namespace hos
