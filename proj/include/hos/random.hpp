#pragma once

#include <cstdint>
#include <initializer_list>

#include <Eigen/Dense>

namespace hos {

/// SplitMix64 finalizer.  All seed derivation in the project reduces to this
/// one bijection so streams stay reproducible across modules.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Child seed for a labelled sub-stream:
///   derive_seed(base, {p0, p1, ...}) = mix64(... mix64(mix64(base) ^ p0) ^ p1 ...)
/// Derived seeds depend only on (base, path), never on how many other paths
/// exist, so extending an experiment never perturbs earlier trials.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix64(base);
  for (std::uint64_t v : path) s = mix64(s ^ v);
  return s;
}

/// Vector of n i.i.d. standard normal draws from a fresh mt19937_64(seed).
Eigen::VectorXd gaussian_vector(int n, std::uint64_t seed);

}  // namespace hos
