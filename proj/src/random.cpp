#include "hos/random.hpp"

#include <random>

namespace hos {

Eigen::VectorXd gaussian_vector(int n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(engine);
  return v;
}

}  // namespace hos
