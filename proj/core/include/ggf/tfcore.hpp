#pragma once

#include <vector>

#include "ggf/types.hpp"

namespace ggf {

/// Time-frequency shift pi(k,l) on C^L:
///   (pi(k,l) psi)(t) = e^{2 pi i l t / L} psi(t - k mod L).
/// Unitary, with pi(z)* = e^{-2 pi i k l / L} pi(-z). Shift components are
/// reduced mod L, so negative inputs are accepted.
Mat tf_shift(int L, PhasePoint z);

/// pi(z) psi without forming the matrix.
Vec apply_tf_shift(PhasePoint z, const Vec& psi);

/// pi(z)* psi without forming the matrix.
Vec apply_tf_shift_adjoint(PhasePoint z, const Vec& psi);

/// Short-time Fourier transform table V(k,l) = <psi, pi(k,l) phi>, computed
/// column-wise by FFT: for each time shift k, an L-point DFT of
/// psi . conj(T_k phi). Throws DimMismatch on unequal lengths.
Mat stft(const Vec& psi, const Vec& phi);

/// Operator translation alpha_z(S) = pi(z) S pi(z)*. Entrywise this is
/// alpha_z(S)(x,y) = e^{2 pi i l (x-y)/L} S(x-k, y-k), an HS isometry.
Mat translate_op(const Mat& s, PhasePoint z);

/// Singular value decomposition S = sum_n values[n] left.col(n) (x) right.col(n),
/// values descending and strictly positive: components below 1e-12 times the
/// largest singular value are dropped as numerical noise, so svd(0) is empty.
struct Svd {
  std::vector<double> values;
  Mat left;
  Mat right;
};

Svd svd(const Mat& s);

}  // namespace ggf
