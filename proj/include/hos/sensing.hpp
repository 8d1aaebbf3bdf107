#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "hos/spectra.hpp"

namespace hos {

enum class OperatorKind { DenseRandom, SpectraRows, SamplingMask };

std::string_view kind_name(OperatorKind kind);
OperatorKind kind_from_name(std::string_view name);

/// A linear map from spectrum vectors in C^R, R = N^(q-1), to C^K.
///
///   DenseRandom  - K x R real matrix, i.i.d. standard normal entries.
///   SpectraRows  - row j is the q-th order spectrum of a stored real
///                  standard-normal generator signal w_j.
///   SamplingMask - K distinct flat indices drawn as a uniform K-subset of
///                  [0, R); as a 0/1 matrix each row has exactly one nonzero
///                  and each column at most one.
///
/// Every payload is a pure function of (kind, K, N, q, seed), which is all a
/// serialized descriptor stores.
struct MeasurementOperator {
  OperatorKind kind = OperatorKind::DenseRandom;
  int num_rows = 0;  // K
  int n = 0;
  int q = 3;
  std::int64_t num_cols = 0;  // R = N^(q-1)
  std::uint64_t seed = 0;

  Eigen::MatrixXd dense;                 // DenseRandom
  Eigen::MatrixXcd rows;                 // SpectraRows, K x R
  Eigen::MatrixXd generators;            // SpectraRows, N x K (column j = w_j)
  std::vector<std::int64_t> indices;     // SamplingMask, sorted, distinct
};

MeasurementOperator build_operator(OperatorKind kind, int num_rows, int n, int q,
                                   std::uint64_t seed,
                                   std::int64_t cap = kDefaultSpectrumCap);

/// y = A * m on raw flat entries (length must equal R).
Eigen::VectorXcd apply(const MeasurementOperator& op, const Eigen::VectorXcd& entries);

/// y = A * M with shape checks against the spectrum's (q, N).
Eigen::VectorXcd apply(const MeasurementOperator& op, const HighOrderSpectrum& m);

/// u = A^H v, length R.
Eigen::VectorXcd apply_adjoint(const MeasurementOperator& op, const Eigen::VectorXcd& v);

/// A * J for a spectrum Jacobian J (R x N), giving the K x N Jacobian of
/// x -> A*M_q(x).
Eigen::MatrixXcd compose_jacobian(const MeasurementOperator& op, const Eigen::MatrixXcd& jac);

/// JSON descriptor {kind, K, N, q, seed}; payloads are regenerated on load.
nlohmann::json descriptor(const MeasurementOperator& op);
MeasurementOperator operator_from_descriptor(const nlohmann::json& j,
                                             std::int64_t cap = kDefaultSpectrumCap);

}  // namespace hos
