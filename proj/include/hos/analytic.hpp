#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "hos/types.hpp"

namespace hos {

/// Input for closed-form recursive phase recovery of a real signal whose
/// Fourier coefficients all have unit modulus, whose mean coefficient
/// xhat[0] is known, and whose first coefficient is fixed to xhat[1] = 1 by
/// choosing the representative of the shift orbit.
///
/// spectrum_entries[k - 2] holds, for k = 2..N-1,
///   q = 3:  M_3(x)[k, N-1]    = xhat[k] * conj(xhat[1]) * conj(xhat[k-1])
///   q = 4:  M_4(x)[k, N-1, 0] = xhat[k] * conj(xhat[1]) * xhat[0] * conj(xhat[k-1])
/// so each coefficient follows from the previous one.  The q = 4 form pins
/// the third index to 0; the extra factor is the known real xhat[0].
struct PhaseRecoveryInput {
  int n = 0;
  int q = 3;  // 3 or 4
  double mean_coefficient = 1.0;        // xhat[0]
  Eigen::VectorXcd spectrum_entries;    // N-2 values, k = 2..N-1
};

/// Recovers the real signal by walking the recursion, checking unit moduli
/// (AssumptionViolated) and conjugate symmetry of the result
/// (InconsistentInput), then inverting the DFT.
Signal recursive_recover(const PhaseRecoveryInput& input);

/// A ground-truth signal built to satisfy the recovery assumptions, together
/// with the exact recovery input computed from its DFT.
struct PhaseRecoveryInstance {
  Signal signal;
  PhaseRecoveryInput input;
};

/// Forward construction: draws free phases for the low half of the DFT,
/// fixes xhat[1] = 1, picks random signs for xhat[0] (and xhat[N/2] when N is
/// even), enforces conjugate symmetry, and reads the required spectrum
/// entries off the coefficient products.
PhaseRecoveryInstance make_phase_recovery_instance(int n, int q, std::uint64_t seed);

}  // namespace hos
