#pragma once

#include <vector>

#include "ggf/lattice.hpp"
#include "ggf/types.hpp"

namespace ggf {

/// Expansion coefficients of an operator in the basis {pi(k,l)}:
///   S = sum_z table(k,l) pi(k,l),   table(k,l) = (1/L) tr(S pi(k,l)*).
/// This is the discrete spreading transform. No half-phase is applied, so the
/// convention is exact for every L, even or odd.
struct SpreadingCoeffs {
  int L = 0;
  Mat table;
};

/// Analysis: spreading coefficients of S, computed as (1/L) times the DFT of
/// each generalized diagonal d_k(t) = S(t, t-k). Exact inverse of synthesize.
SpreadingCoeffs spreading_of(const Mat& s);

/// Synthesis: S = sum_z c.table(k,l) pi(k,l).
Mat synthesize(const SpreadingCoeffs& c);

/// Weyl symbol, the symplectic transform of the spreading coefficients:
///   a(u) = sum_z c(z) e^{2 pi i sigma(z,u)/L}.
/// Translating the operator by w cyclically shifts the symbol by w.
Mat weyl_symbol(const Mat& s);

/// Fourier series of a Lambda-periodic operator: its spreading coefficients
/// restricted to the adjoint lattice, in adjoint().points() order.
struct FourierSeries {
  Lattice adjoint;
  std::vector<cplx> coeffs;
  /// HS norm of the spreading content off the adjoint lattice, relative to
  /// the HS norm of the operator. Vanishes for exactly periodic operators.
  double off_lattice_residual = 0.0;
};

/// Requires alpha_lambda(T) = T for every lambda (tolerance 1e-8 relative in
/// HS norm); throws NotPeriodic with the offending lambda otherwise.
FourierSeries fourier_series_of_periodic(const Mat& t, const Lattice& lat);

}  // namespace ggf
