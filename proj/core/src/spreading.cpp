#include "ggf/spreading.hpp"

#include "dft.hpp"
#include "ggf/tfcore.hpp"

namespace ggf {

SpreadingCoeffs spreading_of(const Mat& s) {
  require_square(s, "spreading_of");
  const int L = static_cast<int>(s.rows());
  SpreadingCoeffs c{L, Mat(L, L)};
  std::vector<cplx> diag(L), spectrum(L);
  for (int k = 0; k < L; ++k) {
    for (int t = 0; t < L; ++t) diag[t] = s(t, mod(t - k, L));
    detail::dft_forward(L, diag.data(), spectrum.data());
    for (int l = 0; l < L; ++l) c.table(k, l) = spectrum[l] / static_cast<double>(L);
  }
  return c;
}

Mat synthesize(const SpreadingCoeffs& c) {
  const int L = c.L;
  if (c.table.rows() != L || c.table.cols() != L) {
    throw DimMismatch("synthesize: coefficient table must be L x L");
  }
  Mat s(L, L);
  std::vector<cplx> row(L), diag(L);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) row[l] = c.table(k, l);
    detail::dft_backward(L, row.data(), diag.data());
    for (int t = 0; t < L; ++t) s(t, mod(t - k, L)) = diag[t];
  }
  return s;
}

Mat weyl_symbol(const Mat& s) {
  SpreadingCoeffs c = spreading_of(s);
  const int L = c.L;
  // a(u1,u2) = sum_{k,l} c(k,l) e^{2 pi i (l u1 - u2 k)/L}: a backward DFT
  // along l followed by a forward DFT along k.
  Mat b(L, L);
  std::vector<cplx> buf_in(L), buf_out(L);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) buf_in[l] = c.table(k, l);
    detail::dft_backward(L, buf_in.data(), buf_out.data());
    for (int u1 = 0; u1 < L; ++u1) b(k, u1) = buf_out[u1];
  }
  Mat a(L, L);
  for (int u1 = 0; u1 < L; ++u1) {
    for (int k = 0; k < L; ++k) buf_in[k] = b(k, u1);
    detail::dft_forward(L, buf_in.data(), buf_out.data());
    for (int u2 = 0; u2 < L; ++u2) a(u1, u2) = buf_out[u2];
  }
  return a;
}

FourierSeries fourier_series_of_periodic(const Mat& t, const Lattice& lat) {
  require_square(t, "fourier_series_of_periodic");
  const int L = static_cast<int>(t.rows());
  if (L != lat.ambient()) throw DimMismatch("fourier_series_of_periodic: operator and lattice dimensions differ");
  const double scale = hs_norm(t);
  for (const auto& lambda : lat.points()) {
    double residual = (translate_op(t, lambda) - t).norm();
    if (residual > 1e-8 * scale) {
      throw NotPeriodic(lambda, scale > 0 ? residual / scale : residual);
    }
  }
  SpreadingCoeffs c = spreading_of(t);
  FourierSeries series{lat.adjoint(), {}, 0.0};
  series.coeffs.reserve(series.adjoint.card());
  for (const auto& p : series.adjoint.points()) {
    series.coeffs.push_back(c.table(p.k, p.l));
  }
  double off = 0.0;
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      if (!series.adjoint.contains({k, l})) off += std::norm(c.table(k, l));
    }
  }
  // Parseval for operators: ||S||_HS^2 = L sum_z |c(z)|^2, so this is the HS
  // norm of the off-lattice component.
  series.off_lattice_residual = scale > 0 ? std::sqrt(L * off) / scale : std::sqrt(L * off);
  return series;
}

}  // namespace ggf
