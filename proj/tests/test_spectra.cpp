#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hos/random.hpp"
#include "hos/spectra.hpp"
#include "oracles.hpp"

using hos::Signal;
using hos::GroupElement;

namespace {

Signal random_real(int n, std::uint64_t seed) {
  return Signal::real(hos::gaussian_vector(n, seed));
}

}  // namespace

TEST_CASE("dft of the unit impulse is flat") {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  x[0] = 1.0;
  const Eigen::VectorXcd xhat = hos::dft(Signal::real(x));
  for (int k = 0; k < 4; ++k) CHECK(std::abs(xhat[k] - 1.0) < 1e-14);
}

TEST_CASE("dft of the constant signal concentrates at zero frequency") {
  const Eigen::VectorXcd xhat = hos::dft(Signal::real(Eigen::VectorXd::Ones(4)));
  CHECK(std::abs(xhat[0] - 4.0) < 1e-14);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(xhat[k]) < 1e-13);
}

TEST_CASE("dft matches direct summation") {
  Eigen::VectorXd x(3);
  x << 1, 2, 3;
  const Eigen::VectorXcd got = hos::dft(Signal::real(x));
  const Eigen::VectorXcd want = oracle::direct_dft(x.cast<oracle::Complex>());
  CHECK(oracle::max_rel_deviation(got, want) < 1e-12);

  for (int n : {1, 2, 5, 8, 13}) {
    const Signal s = random_real(n, 100 + n);
    CHECK(oracle::max_rel_deviation(hos::dft(s), oracle::direct_dft(s.values)) < 1e-12);
  }
}

TEST_CASE("dft is linear") {
  const int n = 7;
  const Signal a = random_real(n, 1), b = random_real(n, 2);
  const Eigen::VectorXcd lhs = hos::dft(Eigen::VectorXcd(2.5 * a.values + b.values));
  const Eigen::VectorXcd rhs = 2.5 * hos::dft(a) + hos::dft(b);
  CHECK(oracle::max_rel_deviation(lhs, rhs) < 1e-12);
}

TEST_CASE("real signals have conjugate-symmetric dft") {
  for (int n : {4, 5, 12}) {
    const Eigen::VectorXcd xhat = hos::dft(random_real(n, 40 + n));
    const double scale = xhat.cwiseAbs().maxCoeff();
    for (int k = 0; k < n; ++k)
      CHECK(std::abs(xhat[k] - std::conj(xhat[(n - k) % n])) <= 1e-12 * scale);
  }
}

TEST_CASE("idft inverts dft") {
  const Signal x = random_real(9, 7);
  CHECK(oracle::max_rel_deviation(hos::idft(hos::dft(x)), x.values) < 1e-12);
}

TEST_CASE("spectrum rejects q below 3") {
  CHECK_THROWS_AS(hos::spectrum(random_real(4, 3), 2), hos::SpectrumOrderTooLow);
  CHECK_THROWS_AS(hos::spectrum(random_real(4, 3), 1), hos::SpectrumOrderTooLow);
}

TEST_CASE("spectrum respects the entry cap") {
  CHECK_THROWS_AS(hos::spectrum(random_real(10, 3), 3, 50), hos::DimensionOverflow);
  CHECK_NOTHROW(hos::spectrum(random_real(10, 3), 3, 100));
}

TEST_CASE("impulse signal has an all-ones spectrum") {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(5);
  x[0] = 1.0;
  const hos::HighOrderSpectrum m = hos::spectrum(Signal::real(x), 3);
  REQUIRE(m.entries.size() == 25);
  for (Eigen::Index i = 0; i < m.entries.size(); ++i)
    CHECK(std::abs(m.entries[i] - 1.0) < 1e-12);
}

TEST_CASE("spectrum matches the nested-loop product oracle") {
  Eigen::VectorXd small(3);
  small << 1, 2, 3;
  const hos::HighOrderSpectrum m = hos::spectrum(Signal::real(small), 3);
  CHECK(oracle::max_rel_deviation(m.entries, oracle::direct_spectrum(small.cast<oracle::Complex>(), 3)) <
        1e-10);

  for (int n = 1; n <= 8; ++n) {
    for (int q : {3, 4, 5}) {
      const Signal x = random_real(n, 1000 + 10 * n + q);
      CHECK(oracle::max_rel_deviation(hos::spectrum(x, q).entries,
                                      oracle::direct_spectrum(x.values, q)) < 1e-10);
    }
  }
}

TEST_CASE("flat index round-trips through tuple_at") {
  const int n = 5, q = 4;
  for (std::int64_t flat : {0l, 7l, 24l, 124l}) {
    const std::vector<int> tuple = hos::tuple_at(flat, n, q);
    CHECK(hos::flat_index(tuple, n) == flat);
  }
}

TEST_CASE("spectrum is invariant under the full symmetry group") {
  for (int n : {4, 7}) {
    for (int q : {3, 4}) {
      const Signal x = random_real(n, 77 + n + q);
      const Eigen::VectorXcd base = hos::spectrum(x, q).entries;
      const double scale = base.cwiseAbs().maxCoeff();
      for (int s = 0; s < n; ++s) {
        for (int l = 0; l < q; ++l) {
          const Signal moved = hos::act({s, l, q}, x);
          const Eigen::VectorXcd other = hos::spectrum(moved, q).entries;
          CHECK((other - base).cwiseAbs().maxCoeff() <= 1e-10 * scale);
        }
      }
    }
  }
}

TEST_CASE("real-signal spectrum entries pair up by index negation") {
  const int n = 6, q = 3;
  const Signal x = random_real(n, 5);
  const hos::HighOrderSpectrum m = hos::spectrum(x, q);
  const double scale = m.entries.cwiseAbs().maxCoeff();
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) {
      const int t1[] = {k1, k2};
      const int t2[] = {(n - k1) % n, (n - k2) % n};
      const oracle::Complex a = m.entries[hos::flat_index(t1, n)];
      const oracle::Complex b = m.entries[hos::flat_index(t2, n)];
      CHECK(std::abs(a - std::conj(b)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("group action composes and is an exact shift") {
  Eigen::VectorXd x(3);
  x << 1, 2, 3;
  const Signal s = Signal::real(x);

  SUBCASE("identity") {
    const Signal out = hos::act({0, 0, 3}, s);
    CHECK(out.values == s.values);
    CHECK(out.domain == hos::Domain::Real);
  }
  SUBCASE("unit shift") {
    const Signal out = hos::act({1, 0, 3}, s);
    CHECK(out.values[0].real() == 3.0);
    CHECK(out.values[1].real() == 1.0);
    CHECK(out.values[2].real() == 2.0);
  }
  SUBCASE("half shift twice returns the original") {
    const Signal t = Signal::real(hos::gaussian_vector(8, 11));
    const Signal once = hos::act({4, 0, 3}, t);
    const Signal twice = hos::act({4, 0, 3}, once);
    CHECK(twice.values == t.values);
  }
  SUBCASE("composition law") {
    const GroupElement a{2, 1, 4}, b{5, 3, 4};
    const Signal t = Signal::real(hos::gaussian_vector(6, 12));
    const Signal seq = hos::act(b, hos::act(a, t));
    const Signal direct = hos::act(hos::compose(a, b, 6), t);
    CHECK(oracle::max_rel_deviation(seq.values, direct.values) < 1e-14);
  }
  SUBCASE("sign flip keeps real signals real") {
    const Signal out = hos::act({0, 2, 4}, s);
    CHECK(out.domain == hos::Domain::Real);
    CHECK(out.values[1].real() == -2.0);
    CHECK(out.values[1].imag() == 0.0);
  }
  SUBCASE("non-real scale promotes the domain") {
    const Signal out = hos::act({0, 1, 4}, s);
    CHECK(out.domain == hos::Domain::Complex);
  }
}

TEST_CASE("spectrum jacobian vanishes at the origin") {
  const Signal zero = Signal::real(Eigen::VectorXd::Zero(4));
  CHECK(hos::spectrum_jacobian(zero, 3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spectrum jacobian matches central finite differences") {
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + (i % 7);           // N in [2, 8]
    const int q = (i % 2 == 0) ? 3 : 4;  // alternate bispectrum / trispectrum
    const Eigen::VectorXd x = hos::gaussian_vector(n, 900 + i);
    const double h = 1e-6 * std::max(1.0, x.cwiseAbs().maxCoeff());

    const Eigen::MatrixXcd jac = hos::spectrum_jacobian(Signal::real(x), q);
    const Eigen::MatrixXcd fd = oracle::fd_jacobian(
        [q](const Eigen::VectorXd& v) {
          return oracle::direct_spectrum(v.cast<oracle::Complex>(), q);
        },
        x, h);
    const double scale = fd.cwiseAbs().maxCoeff();
    CHECK((jac - fd).cwiseAbs().maxCoeff() <= 1e-5 * scale);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("spectrum_dft_adjoint agrees with the materialized jacobian") {
  const int n = 5, q = 3;
  const Signal x = random_real(n, 21);
  const Eigen::VectorXcd xhat = hos::dft(x);
  const Eigen::VectorXcd w =
      hos::gaussian_vector(25, 22).cast<oracle::Complex>() +
      oracle::Complex(0, 1) * hos::gaussian_vector(25, 23).cast<oracle::Complex>();

  // (dM/dxhat)^H w  ==  F^-H J^H w  since J = (dM/dxhat) F
  Eigen::VectorXcd via_adjoint;
  hos::spectrum_dft_adjoint(xhat, q, w, via_adjoint);
  const Eigen::MatrixXcd f = hos::dft_matrix(n);
  const Eigen::VectorXcd via_jac =
      f.adjoint().fullPivLu().solve(hos::spectrum_jacobian(x, q).adjoint() * w);
  CHECK(oracle::max_rel_deviation(via_adjoint, via_jac) < 1e-9);
}
