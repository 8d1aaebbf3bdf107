#include "hos/sensing.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <ranges>

#include "hos/random.hpp"

namespace hos {

std::string_view kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::DenseRandom: return "dense-random";
    case OperatorKind::SpectraRows: return "spectra-rows";
    case OperatorKind::SamplingMask: return "sampling-mask";
  }
  throw InvalidArgument("unknown operator kind");
}

OperatorKind kind_from_name(std::string_view name) {
  if (name == "dense-random") return OperatorKind::DenseRandom;
  if (name == "spectra-rows") return OperatorKind::SpectraRows;
  if (name == "sampling-mask") return OperatorKind::SamplingMask;
  throw InvalidArgument("unknown operator kind name: " + std::string(name));
}

MeasurementOperator build_operator(OperatorKind kind, int num_rows, int n, int q,
                                   std::uint64_t seed, std::int64_t cap) {
  if (num_rows < 1) throw InvalidArgument("operator needs at least one row");
  MeasurementOperator op;
  op.kind = kind;
  op.num_rows = num_rows;
  op.n = n;
  op.q = q;
  op.num_cols = spectrum_length(n, q, cap);
  op.seed = seed;

  std::mt19937_64 engine(seed);
  switch (kind) {
    case OperatorKind::DenseRandom: {
      std::normal_distribution<double> normal(0.0, 1.0);
      op.dense.resize(num_rows, op.num_cols);
      // row-major draw order: row r is a contiguous run of the stream
      for (int r = 0; r < num_rows; ++r)
        for (std::int64_t c = 0; c < op.num_cols; ++c) op.dense(r, c) = normal(engine);
      break;
    }
    case OperatorKind::SpectraRows: {
      std::normal_distribution<double> normal(0.0, 1.0);
      op.generators.resize(n, num_rows);
      op.rows.resize(num_rows, op.num_cols);
      Eigen::VectorXcd row_entries;
      for (int r = 0; r < num_rows; ++r) {
        for (int i = 0; i < n; ++i) op.generators(i, r) = normal(engine);
        spectrum_from_dft(dft(Eigen::VectorXd(op.generators.col(r))), q, row_entries);
        op.rows.row(r) = row_entries.transpose();
      }
      break;
    }
    case OperatorKind::SamplingMask: {
      if (num_rows > op.num_cols)
        throw TooManySamples("sampling mask rows exceed spectrum entries");
      op.indices.reserve(num_rows);
      auto all = std::views::iota(std::int64_t{0}, op.num_cols);
      std::sample(all.begin(), all.end(), std::back_inserter(op.indices), num_rows, engine);
      std::sort(op.indices.begin(), op.indices.end());
      break;
    }
  }
  return op;
}

Eigen::VectorXcd apply(const MeasurementOperator& op, const Eigen::VectorXcd& entries) {
  if (entries.size() != op.num_cols) throw ShapeMismatch("spectrum length != operator columns");
  switch (op.kind) {
    case OperatorKind::DenseRandom: {
      Eigen::VectorXcd y(op.num_rows);
      y.real() = op.dense * entries.real();
      y.imag() = op.dense * entries.imag();
      return y;
    }
    case OperatorKind::SpectraRows:
      return op.rows * entries;
    case OperatorKind::SamplingMask: {
      Eigen::VectorXcd y(op.num_rows);
      for (int r = 0; r < op.num_rows; ++r) y[r] = entries[op.indices[r]];
      return y;
    }
  }
  throw InvalidArgument("unknown operator kind");
}

Eigen::VectorXcd apply(const MeasurementOperator& op, const HighOrderSpectrum& m) {
  if (m.q != op.q || m.n != op.n) throw ShapeMismatch("spectrum (q, N) != operator (q, N)");
  return apply(op, m.entries);
}

Eigen::VectorXcd apply_adjoint(const MeasurementOperator& op, const Eigen::VectorXcd& v) {
  if (v.size() != op.num_rows) throw ShapeMismatch("vector length != operator rows");
  switch (op.kind) {
    case OperatorKind::DenseRandom: {
      Eigen::VectorXcd u(op.num_cols);
      u.real() = op.dense.transpose() * v.real();
      u.imag() = op.dense.transpose() * v.imag();
      return u;
    }
    case OperatorKind::SpectraRows:
      return op.rows.adjoint() * v;
    case OperatorKind::SamplingMask: {
      Eigen::VectorXcd u = Eigen::VectorXcd::Zero(op.num_cols);
      for (int r = 0; r < op.num_rows; ++r) u[op.indices[r]] = v[r];
      return u;
    }
  }
  throw InvalidArgument("unknown operator kind");
}

Eigen::MatrixXcd compose_jacobian(const MeasurementOperator& op, const Eigen::MatrixXcd& jac) {
  if (jac.rows() != op.num_cols) throw ShapeMismatch("jacobian rows != operator columns");
  switch (op.kind) {
    case OperatorKind::DenseRandom: {
      Eigen::MatrixXcd out(op.num_rows, jac.cols());
      out.real() = op.dense * jac.real();
      out.imag() = op.dense * jac.imag();
      return out;
    }
    case OperatorKind::SpectraRows:
      return op.rows * jac;
    case OperatorKind::SamplingMask: {
      Eigen::MatrixXcd out(op.num_rows, jac.cols());
      for (int r = 0; r < op.num_rows; ++r) out.row(r) = jac.row(op.indices[r]);
      return out;
    }
  }
  throw InvalidArgument("unknown operator kind");
}

nlohmann::json descriptor(const MeasurementOperator& op) {
  return {{"kind", kind_name(op.kind)},
          {"K", op.num_rows},
          {"N", op.n},
          {"q", op.q},
          {"seed", op.seed}};
}

MeasurementOperator operator_from_descriptor(const nlohmann::json& j, std::int64_t cap) {
  return build_operator(kind_from_name(j.at("kind").get<std::string>()), j.at("K").get<int>(),
                        j.at("N").get<int>(), j.at("q").get<int>(),
                        j.at("seed").get<std::uint64_t>(), cap);
}

}  // namespace hos
