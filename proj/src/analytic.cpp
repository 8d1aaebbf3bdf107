#include "hos/analytic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hos/spectra.hpp"

namespace hos {

namespace {

void check_order(int q) {
  if (q != 3 && q != 4) throw InvalidArgument("recursive recovery supports q = 3 or 4");
}

}  // namespace

Signal recursive_recover(const PhaseRecoveryInput& input) {
  const int n = input.n;
  check_order(input.q);
  if (n < 3) throw InvalidArgument("recursive recovery needs N >= 3");
  if (input.spectrum_entries.size() != n - 2)
    throw ShapeMismatch("expected N-2 spectrum entries");
  for (int i = 0; i < n - 2; ++i) {
    if (std::abs(std::abs(input.spectrum_entries[i]) - 1.0) > 1e-8)
      throw AssumptionViolated("spectrum entry without unit modulus");
  }
  if (input.q == 4 && input.mean_coefficient == 0.0)
    throw AssumptionViolated("vanishing mean coefficient");

  // Walk the recursion upward from xhat[1] = 1.  Unit moduli make every
  // conjugate factor its own inverse, so each step is a single product.
  Eigen::VectorXcd xhat(n);
  xhat[0] = input.mean_coefficient;
  xhat[1] = 1.0;
  for (int k = 2; k < n; ++k) {
    Complex value = input.spectrum_entries[k - 2] * xhat[k - 1];
    if (input.q == 4) value /= input.mean_coefficient;
    xhat[k] = value;
  }

  for (int k = 1; k < n; ++k) {
    if (std::abs(xhat[k] - std::conj(xhat[(n - k) % n])) > 1e-6)
      throw InconsistentInput("recovered coefficients break conjugate symmetry");
  }

  // Symmetrize the residual rounding before inverting so the output is real.
  for (int k = 1; 2 * k <= n; ++k) {
    const Complex z = 0.5 * (xhat[k] + std::conj(xhat[n - k]));
    xhat[k] = z;
    xhat[n - k] = std::conj(z);
  }
  return Signal::real(idft(xhat).real());
}

PhaseRecoveryInstance make_phase_recovery_instance(int n, int q, std::uint64_t seed) {
  check_order(q);
  if (n < 3) throw InvalidArgument("instance needs N >= 3");

  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution sign(0.5);

  Eigen::VectorXcd xhat = Eigen::VectorXcd::Zero(n);
  xhat[0] = sign(engine) ? 1.0 : -1.0;
  xhat[1] = 1.0;
  for (int k = 2; 2 * k < n; ++k) xhat[k] = std::polar(1.0, angle(engine));
  if (n % 2 == 0) xhat[n / 2] = sign(engine) ? 1.0 : -1.0;
  for (int k = 1; 2 * k < n; ++k) xhat[n - k] = std::conj(xhat[k]);

  PhaseRecoveryInstance instance;
  instance.signal = Signal::real(idft(xhat).real());
  instance.input.n = n;
  instance.input.q = q;
  instance.input.mean_coefficient = xhat[0].real();
  instance.input.spectrum_entries.resize(n - 2);
  for (int k = 2; k < n; ++k) {
    Complex entry = xhat[k] * std::conj(xhat[1]) * std::conj(xhat[k - 1]);
    if (q == 4) entry *= xhat[0];
    instance.input.spectrum_entries[k - 2] = entry;
  }
  return instance;
}

}  // namespace hos
