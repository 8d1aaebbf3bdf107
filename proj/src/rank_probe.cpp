#include "hos/rank_probe.hpp"

#include <algorithm>

#include <Eigen/SVD>

#include "hos/random.hpp"
#include "hos/sensing.hpp"

namespace hos {

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (rel_tol <= 0.0 || rel_tol >= 1.0) throw InvalidArgument("rel_tol must lie in (0, 1)");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const Eigen::VectorXd sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  const double cutoff = rel_tol * sigma[0];
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] >= cutoff) ++rank;
  return rank;
}

RankProbeReport probe_injectivity_rank(int n, int q, int num_rows, int trials,
                                       std::uint64_t seed, double rel_tol) {
  RankProbeReport report;
  report.n = n;
  report.q = q;
  report.num_rows = num_rows;
  report.trials = trials;
  report.seed = seed;
  report.rel_tol = rel_tol;
  report.ranks.reserve(trials);

  for (int t = 0; t < trials; ++t) {
    const auto tu = static_cast<std::uint64_t>(t);
    const Signal x = Signal::real(gaussian_vector(n, derive_seed(seed, {tu, 0})));
    const MeasurementOperator op =
        build_operator(OperatorKind::DenseRandom, num_rows, n, q, derive_seed(seed, {tu, 1}));
    report.ranks.push_back(numerical_rank(compose_jacobian(op, spectrum_jacobian(x, q)), rel_tol));
  }
  report.min_rank = report.ranks.empty()
                        ? 0
                        : *std::min_element(report.ranks.begin(), report.ranks.end());
  report.pass = num_rows >= n + 1 && report.min_rank == n;
  return report;
}

nlohmann::json to_json(const RankProbeReport& report) {
  return {{"N", report.n},          {"q", report.q},
          {"K", report.num_rows},   {"trials", report.trials},
          {"seed", report.seed},    {"rel_tol", report.rel_tol},
          {"ranks", report.ranks},  {"min_rank", report.min_rank},
          {"pass", report.pass}};
}

}  // namespace hos
