#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hos/errors.hpp"
#include "hos/types.hpp"

namespace hos {

/// Refuse spectra with more than this many entries unless the caller raises
/// the cap explicitly.
inline constexpr std::int64_t kDefaultSpectrumCap = std::int64_t{1} << 26;

/// The q-th order spectrum of a length-N signal, flattened to a column vector
/// of length R = N^(q-1).
///
/// Index convention: the tuple (k_1, ..., k_{q-1}) with k_1 most significant
/// maps to flat index k_1*N^(q-2) + k_2*N^(q-3) + ... + k_{q-1}.  Entry value:
///
///   entries[(k_1,...,k_{q-1})] = xhat[k_1] * ... * xhat[k_{q-1}] * xhat[k_q],
///   k_q = (-k_1 - ... - k_{q-1}) mod N,
///
/// where xhat = dft(x).  Every entry is invariant under circular shifts of x
/// and under multiplication of x by a q-th root of unity.
struct HighOrderSpectrum {
  int q = 3;
  int n = 0;  // signal length
  Eigen::VectorXcd entries;
};

/// N^(q-1) with overflow/cap checking.
std::int64_t spectrum_length(int n, int q, std::int64_t cap = kDefaultSpectrumCap);

/// Flat index of a (q-1)-tuple under the k_1-most-significant convention.
std::int64_t flat_index(std::span<const int> tuple, int n);

/// Inverse of flat_index: the (q-1)-tuple stored at a flat position.
std::vector<int> tuple_at(std::int64_t flat, int n, int q);

/// Forward DFT, xhat[k] = sum_m x[m] * exp(-2*pi*i*m*k/N), no normalization.
Eigen::VectorXcd dft(const Eigen::VectorXcd& x);
Eigen::VectorXcd dft(const Eigen::VectorXd& x);
Eigen::VectorXcd dft(const Signal& x);

/// Inverse DFT, x[m] = (1/N) * sum_k xhat[k] * exp(+2*pi*i*m*k/N).
Eigen::VectorXcd idft(const Eigen::VectorXcd& xhat);

/// Dense forward-DFT matrix F with F(k, m) = exp(-2*pi*i*k*m/N).
Eigen::MatrixXcd dft_matrix(int n);

/// q-th order spectrum of x.  Throws SpectrumOrderTooLow for q < 3 and
/// DimensionOverflow when N^(q-1) exceeds the cap.
HighOrderSpectrum spectrum(const Signal& x, int q,
                           std::int64_t cap = kDefaultSpectrumCap);

/// Same as spectrum() but starting from precomputed DFT coefficients; writes
/// the R entries into out.  This is the path hot loops use.
void spectrum_from_dft(const Eigen::VectorXcd& xhat, int q, Eigen::VectorXcd& out);

/// Jacobian of the spectrum map x -> M_q(x), an N^(q-1) x N complex matrix.
/// For real signals the columns are partial derivatives with respect to the N
/// real entries; the expression is the same because the map is polynomial.
Eigen::MatrixXcd spectrum_jacobian(const Signal& x, int q,
                                   std::int64_t cap = kDefaultSpectrumCap);

/// Adjoint contraction v = (dM/dxhat)^H w, a length-N vector.  Combined with
/// the DFT adjoint this gives objective gradients without materializing the
/// R x N Jacobian.
void spectrum_dft_adjoint(const Eigen::VectorXcd& xhat, int q,
                          const Eigen::VectorXcd& weights, Eigen::VectorXcd& out);

}  // namespace hos
