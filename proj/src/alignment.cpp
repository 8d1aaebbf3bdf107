#include "hos/alignment.hpp"

#include <algorithm>
#include <limits>

#include "hos/errors.hpp"

namespace hos {

namespace {

double min_shift_error(const Signal& estimate, const Signal& truth, bool with_sign_flip) {
  const int n = truth.size();
  if (estimate.size() != n) throw ShapeMismatch("estimate and truth lengths differ");
  const double truth_norm = truth.values.norm();
  if (truth_norm == 0.0) throw ZeroTruthSignal("alignment against the zero signal");

  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd shifted(n);
  for (int s = 0; s < n; ++s) {
    for (int m = 0; m < n; ++m) shifted[m] = estimate.values[(m - s + n) % n];
    best = std::min(best, (shifted - truth.values).norm());
    if (with_sign_flip) best = std::min(best, (-shifted - truth.values).norm());
  }
  return best / truth_norm;
}

}  // namespace

double bispectrum_relative_error(const Signal& estimate, const Signal& truth) {
  return min_shift_error(estimate, truth, false);
}

double trispectrum_relative_error(const Signal& estimate, const Signal& truth) {
  return min_shift_error(estimate, truth, true);
}

double orbit_relative_error(const Signal& estimate, const Signal& truth, int q) {
  return min_shift_error(estimate, truth, q % 2 == 0);
}

bool is_success(double err, const SuccessCriterion& c) { return err < c.threshold; }

}  // namespace hos
