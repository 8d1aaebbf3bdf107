// Test-only reference implementations, deliberately independent of the
// library code paths they check: direct summation DFT, nested-loop spectra,
// naive dense products, and central finite differences.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

inline Eigen::VectorXcd direct_dft(const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXcd out(n);
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int m = 0; m < n; ++m) {
      const double angle = -2.0 * std::numbers::pi * m * k / n;
      acc += x[m] * Complex(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

// Flat spectrum by explicit tuple decode and per-entry product; no shared
// state with the library's odometer loop.
inline Eigen::VectorXcd direct_spectrum(const Eigen::VectorXcd& x, int q) {
  const int n = static_cast<int>(x.size());
  const Eigen::VectorXcd xhat = direct_dft(x);
  std::int64_t total = 1;
  for (int i = 0; i < q - 1; ++i) total *= n;

  Eigen::VectorXcd out(total);
  for (std::int64_t flat = 0; flat < total; ++flat) {
    std::int64_t rest = flat;
    int sum = 0;
    Complex prod = 1.0;
    std::vector<int> tuple(q - 1);
    for (int i = q - 2; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    for (int i = 0; i < q - 1; ++i) {
      prod *= xhat[tuple[i]];
      sum += tuple[i];
    }
    prod *= xhat[((-sum) % n + n) % n];
    out[flat] = prod;
  }
  return out;
}

// Central finite differences of a vector map at x, column j = df/dx_j.
inline Eigen::MatrixXcd fd_jacobian(const std::function<Eigen::VectorXcd(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  const Eigen::VectorXcd f0 = f(x);
  Eigen::MatrixXcd jac(f0.size(), n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    jac.col(j) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return jac;
}

inline Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXd g(n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    g[j] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

inline Eigen::VectorXcd naive_matvec(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(a.rows());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Complex acc = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

inline Eigen::MatrixXcd naive_matmul(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(a.rows(), b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      for (Eigen::Index c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
  return out;
}

inline double max_rel_deviation(const Eigen::VectorXcd& got, const Eigen::VectorXcd& want) {
  const double scale = std::max(want.cwiseAbs().maxCoeff(), 1e-300);
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

}  // namespace oracle
