#pragma once

#include <stdexcept>

namespace hos {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// spectrum() called with q < 3.
struct SpectrumOrderTooLow : Error {
  using Error::Error;
};

// N^(q-1) exceeds the configured entry cap (or does not fit in 64 bits).
struct DimensionOverflow : Error {
  using Error::Error;
};

// SamplingMask requested with more rows than spectrum entries.
struct TooManySamples : Error {
  using Error::Error;
};

// Operator, spectrum, or measurement dimensions disagree.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Objective or gradient left the representable range mid-descent.
struct NonFiniteObjective : Error {
  using Error::Error;
};

// Alignment error against an all-zero reference signal.
struct ZeroTruthSignal : Error {
  using Error::Error;
};

// Phase-recovery input violates the unit-modulus assumptions.
struct AssumptionViolated : Error {
  using Error::Error;
};

// Recovered coefficients break conjugate symmetry beyond tolerance.
struct InconsistentInput : Error {
  using Error::Error;
};

// Malformed arguments that match no more specific category.
struct InvalidArgument : Error {
  using Error::Error;
};

// File I/O failure; message carries the offending path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace hos
