#pragma once

#include "hos/types.hpp"

namespace hos {

struct SuccessCriterion {
  double threshold = 5e-5;
};

/// min over circular shifts s of |R_s(estimate) - truth|_2 / |truth|_2.
double bispectrum_relative_error(const Signal& estimate, const Signal& truth);

/// Same with the extra sign-flip symmetry: min over s and z in {+1, -1} of
/// |z * R_s(estimate) - truth|_2 / |truth|_2.
double trispectrum_relative_error(const Signal& estimate, const Signal& truth);

/// Dispatch on spectrum order: even q admits the sign flip, odd q does not.
double orbit_relative_error(const Signal& estimate, const Signal& truth, int q);

/// Strictly below the threshold counts as success.
bool is_success(double err, const SuccessCriterion& c = {});

}  // namespace hos
