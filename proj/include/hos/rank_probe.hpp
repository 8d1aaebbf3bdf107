#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace hos {

/// Number of singular values with sigma_i >= rel_tol * sigma_max; 0 for the
/// zero matrix.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol);

struct RankProbeReport {
  int n = 0;
  int q = 3;
  int num_rows = 0;  // K
  int trials = 0;
  std::uint64_t seed = 0;
  double rel_tol = 1e-8;
  std::vector<int> ranks;  // one per trial
  int min_rank = 0;
  bool pass = false;  // min rank == N, evaluated when K >= N+1
};

/// Draws (x, A) pairs - x real standard normal, A DenseRandom with K rows -
/// and records the numerical rank of the K x N Jacobian of x -> A*M_q(x).
/// Full rank N at every generic point is the differential signature that K
/// compressed spectrum measurements still separate nearby orbits.
RankProbeReport probe_injectivity_rank(int n, int q, int num_rows, int trials,
                                       std::uint64_t seed, double rel_tol = 1e-8);

nlohmann::json to_json(const RankProbeReport& report);

}  // namespace hos
