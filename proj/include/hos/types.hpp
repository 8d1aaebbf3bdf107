#pragma once

#include <complex>

#include <Eigen/Dense>

#include "hos/errors.hpp"

namespace hos {

using Complex = std::complex<double>;

enum class Domain { Real, Complex };

/// A finite signal of length N, real- or complex-valued.  Real signals are
/// stored with exactly-zero imaginary parts so the two domains share one
/// representation.
struct Signal {
  Eigen::VectorXcd values;
  Domain domain = Domain::Complex;

  int size() const { return static_cast<int>(values.size()); }

  static Signal real(const Eigen::VectorXd& v) {
    Signal s;
    s.values = v.cast<Complex>();
    s.domain = Domain::Real;
    return s;
  }

  static Signal complex(const Eigen::VectorXcd& v) {
    Signal s;
    s.values = v;
    s.domain = Domain::Complex;
    return s;
  }
};

/// One element (s, l) of the symmetry group Z_N x Z_q: a circular shift by s
/// together with multiplication by the root of unity exp(2*pi*i*l/order).
struct GroupElement {
  int shift = 0;        // s, taken modulo the signal length
  int scale_index = 0;  // l in [0, order)
  int order = 3;        // q; fixes which roots of unity are available
};

/// Group law: shifts add modulo N, scale indices add modulo the order.
inline GroupElement compose(const GroupElement& a, const GroupElement& b, int n) {
  if (a.order != b.order) throw InvalidArgument("compose: mismatched group orders");
  GroupElement g;
  g.order = a.order;
  g.shift = (((a.shift + b.shift) % n) + n) % n;
  g.scale_index = (((a.scale_index + b.scale_index) % a.order) + a.order) % a.order;
  return g;
}

/// Root of unity exp(2*pi*i*l/q).  The +-1 and +-i cases are produced exactly
/// so acting on a real signal with a real scale keeps imaginary parts at zero.
Complex unit_root(int scale_index, int order);

/// Applies g to x: out[m] = z * x[(m - s) mod N].  A non-real scale promotes a
/// real signal to the complex domain.
Signal act(const GroupElement& g, const Signal& x);

}  // namespace hos
