#include "hos/spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hos {

namespace {

void check_signal(int n) {
  if (n < 1) throw InvalidArgument("signal length must be at least 1");
}

// Product of xhat over the tuple positions [begin, end).
Complex product_over(const Eigen::VectorXcd& xhat, std::span<const int> tuple) {
  Complex p = 1.0;
  for (int k : tuple) p *= xhat[k];
  return p;
}

}  // namespace

Complex unit_root(int scale_index, int order) {
  if (order < 1) throw InvalidArgument("group order must be positive");
  int l = ((scale_index % order) + order) % order;
  if (l == 0) return {1.0, 0.0};
  if (2 * l == order) return {-1.0, 0.0};
  if (4 * l == order) return {0.0, 1.0};
  if (4 * l == 3 * order) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(l) / order;
  return {std::cos(angle), std::sin(angle)};
}

Signal act(const GroupElement& g, const Signal& x) {
  const int n = x.size();
  check_signal(n);
  const int s = ((g.shift % n) + n) % n;
  const Complex z = unit_root(g.scale_index, g.order);

  Signal out;
  out.values.resize(n);
  for (int m = 0; m < n; ++m) out.values[m] = z * x.values[(m - s + n) % n];
  out.domain = (z.imag() == 0.0) ? x.domain : Domain::Complex;
  return out;
}

std::int64_t spectrum_length(int n, int q, std::int64_t cap) {
  check_signal(n);
  if (q < 3) throw SpectrumOrderTooLow("spectrum order q must be at least 3");
  std::int64_t r = 1;
  for (int i = 0; i < q - 1; ++i) {
    if (r > cap / n) throw DimensionOverflow("N^(q-1) exceeds the configured entry cap");
    r *= n;
  }
  return r;
}

std::int64_t flat_index(std::span<const int> tuple, int n) {
  std::int64_t flat = 0;
  for (int k : tuple) {
    if (k < 0 || k >= n) throw InvalidArgument("tuple index out of range");
    flat = flat * n + k;
  }
  return flat;
}

std::vector<int> tuple_at(std::int64_t flat, int n, int q) {
  std::vector<int> tuple(q - 1, 0);
  for (int i = q - 2; i >= 0; --i) {
    tuple[i] = static_cast<int>(flat % n);
    flat /= n;
  }
  return tuple;
}

Eigen::MatrixXcd dft_matrix(int n) {
  check_signal(n);
  Eigen::MatrixXcd f(n, n);
  const double step = -2.0 * std::numbers::pi / n;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      // reduce r*c mod n before taking the angle; keeps phases accurate for large rc
      const int rc = static_cast<int>((static_cast<std::int64_t>(r) * c) % n);
      f(r, c) = Complex(std::cos(step * rc), std::sin(step * rc));
    }
  }
  return f;
}

Eigen::VectorXcd dft(const Eigen::VectorXcd& x) {
  check_signal(static_cast<int>(x.size()));
  return dft_matrix(static_cast<int>(x.size())) * x;
}

Eigen::VectorXcd dft(const Eigen::VectorXd& x) { return dft(Eigen::VectorXcd(x.cast<Complex>())); }

Eigen::VectorXcd dft(const Signal& x) { return dft(x.values); }

Eigen::VectorXcd idft(const Eigen::VectorXcd& xhat) {
  const int n = static_cast<int>(xhat.size());
  check_signal(n);
  return dft_matrix(n).adjoint() * xhat / static_cast<double>(n);
}

void spectrum_from_dft(const Eigen::VectorXcd& xhat, int q, Eigen::VectorXcd& out) {
  const int n = static_cast<int>(xhat.size());
  const std::int64_t r_total = spectrum_length(n, q, std::numeric_limits<std::int64_t>::max());
  out.resize(r_total);

  // Odometer over the leading q-2 indices; the innermost index k_{q-1} is the
  // fast loop so "head" (the product and index-sum of the leading digits)
  // changes only once per block of n entries.
  std::vector<int> head_digits(q - 2, 0);
  std::int64_t flat = 0;
  while (true) {
    Complex head = product_over(xhat, head_digits);
    int head_sum = 0;
    for (int k : head_digits) head_sum += k;
    head_sum %= n;

    for (int k_last = 0; k_last < n; ++k_last) {
      const int k_q = (2 * n - (head_sum + k_last) % n) % n;
      out[flat++] = head * xhat[k_last] * xhat[k_q];
    }

    int pos = q - 3;
    while (pos >= 0 && ++head_digits[pos] == n) head_digits[pos--] = 0;
    if (pos < 0) break;
  }
}

HighOrderSpectrum spectrum(const Signal& x, int q, std::int64_t cap) {
  const int n = x.size();
  (void)spectrum_length(n, q, cap);  // validates q and the cap
  HighOrderSpectrum m;
  m.q = q;
  m.n = n;
  spectrum_from_dft(dft(x), q, m.entries);
  return m;
}

Eigen::MatrixXcd spectrum_jacobian(const Signal& x, int q, std::int64_t cap) {
  const int n = x.size();
  const std::int64_t r_total = spectrum_length(n, q, cap);
  const Eigen::VectorXcd xhat = dft(x);
  const Eigen::MatrixXcd f = dft_matrix(n);

  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(r_total, n);
  std::vector<int> tuple(q, 0);  // q-1 free indices plus the dependent k_q
  std::vector<Complex> prefix(q + 1), suffix(q + 1);
  for (std::int64_t row = 0; row < r_total; ++row) {
    std::int64_t rest = row;
    int sum = 0;
    for (int i = q - 2; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % n);
      sum += tuple[i];
      rest /= n;
    }
    tuple[q - 1] = (n - sum % n) % n;

    // d(prod_i xhat[k_i])/dxhat[k_j] = prod_{i != j} xhat[k_i]; repeated
    // indices accumulate through the sum over positions.
    prefix[0] = 1.0;
    for (int i = 0; i < q; ++i) prefix[i + 1] = prefix[i] * xhat[tuple[i]];
    suffix[q] = 1.0;
    for (int i = q - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * xhat[tuple[i]];
    for (int j = 0; j < q; ++j) {
      jac.row(row).noalias() += (prefix[j] * suffix[j + 1]) * f.row(tuple[j]);
    }
  }
  return jac;
}

void spectrum_dft_adjoint(const Eigen::VectorXcd& xhat, int q,
                          const Eigen::VectorXcd& weights, Eigen::VectorXcd& out) {
  const int n = static_cast<int>(xhat.size());
  const std::int64_t r_total = spectrum_length(n, q, std::numeric_limits<std::int64_t>::max());
  if (weights.size() != r_total) throw ShapeMismatch("adjoint weights length != N^(q-1)");

  out = Eigen::VectorXcd::Zero(n);
  std::vector<int> tuple(q, 0);
  std::vector<Complex> prefix(q + 1), suffix(q + 1);
  for (std::int64_t row = 0; row < r_total; ++row) {
    std::int64_t rest = row;
    int sum = 0;
    for (int i = q - 2; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % n);
      sum += tuple[i];
      rest /= n;
    }
    tuple[q - 1] = (n - sum % n) % n;

    prefix[0] = 1.0;
    for (int i = 0; i < q; ++i) prefix[i + 1] = prefix[i] * xhat[tuple[i]];
    suffix[q] = 1.0;
    for (int i = q - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * xhat[tuple[i]];
    const Complex w = weights[row];
    for (int j = 0; j < q; ++j) {
      out[tuple[j]] += std::conj(prefix[j] * suffix[j + 1]) * w;
    }
  }
}

}  // namespace hos
