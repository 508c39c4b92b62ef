#include "ggf/tfcore.hpp"

#include <Eigen/SVD>

#include "dft.hpp"

namespace ggf {

std::string to_string(PhasePoint z) {
  return "(" + std::to_string(z.k) + "," + std::to_string(z.l) + ")";
}

NotPeriodic::NotPeriodic(PhasePoint lambda_, double residual_)
    : Error("not-periodic: operator moves under translation by " + to_string(lambda_) +
            ", relative residual " + std::to_string(residual_)),
      lambda(lambda_),
      residual(residual_) {}

NotUnderspread::NotUnderspread(PhasePoint difference_)
    : Error("not-underspread: support difference " + to_string(difference_) +
            " lies in the adjoint lattice"),
      difference(difference_) {}

Mat tf_shift(int L, PhasePoint z) {
  if (L < 2) throw DimMismatch("tf_shift: dimension must be at least 2");
  z = reduce(z, L);
  auto roots = detail::unit_roots(L);
  Mat m = Mat::Zero(L, L);
  for (int x = 0; x < L; ++x) {
    m(x, mod(x - z.k, L)) = roots[mod(static_cast<long>(z.l) * x, L)];
  }
  return m;
}

Vec apply_tf_shift(PhasePoint z, const Vec& psi) {
  const int L = static_cast<int>(psi.size());
  z = reduce(z, L);
  auto roots = detail::unit_roots(L);
  Vec out(L);
  for (int t = 0; t < L; ++t) {
    out(t) = roots[mod(static_cast<long>(z.l) * t, L)] * psi(mod(t - z.k, L));
  }
  return out;
}

Vec apply_tf_shift_adjoint(PhasePoint z, const Vec& psi) {
  const int L = static_cast<int>(psi.size());
  z = reduce(z, L);
  auto roots = detail::unit_roots(L);
  Vec out(L);
  for (int t = 0; t < L; ++t) {
    // (pi(z)* psi)(t) = e^{-2 pi i l (t+k)/L} psi(t + k mod L)
    out(t) = std::conj(roots[mod(static_cast<long>(z.l) * (t + z.k), L)]) * psi(mod(t + z.k, L));
  }
  return out;
}

Mat stft(const Vec& psi, const Vec& phi) {
  require_same_length(psi, phi, "stft");
  const int L = static_cast<int>(psi.size());
  Mat v(L, L);
  std::vector<cplx> product(L), spectrum(L);
  for (int k = 0; k < L; ++k) {
    for (int t = 0; t < L; ++t) {
      product[t] = psi(t) * std::conj(phi(mod(t - k, L)));
    }
    detail::dft_forward(L, product.data(), spectrum.data());
    for (int l = 0; l < L; ++l) v(k, l) = spectrum[l];
  }
  return v;
}

Mat translate_op(const Mat& s, PhasePoint z) {
  require_square(s, "translate_op");
  const int L = static_cast<int>(s.rows());
  z = reduce(z, L);
  auto roots = detail::unit_roots(L);
  Mat out(L, L);
  for (int x = 0; x < L; ++x) {
    const int xs = mod(x - z.k, L);
    for (int y = 0; y < L; ++y) {
      out(x, y) = roots[mod(static_cast<long>(z.l) * (x - y), L)] * s(xs, mod(y - z.k, L));
    }
  }
  return out;
}

Svd svd(const Mat& s) {
  Eigen::JacobiSVD<Mat> solver(s, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = solver.singularValues();
  const double cutoff = sigma.size() > 0 ? 1e-12 * sigma(0) : 0.0;
  int keep = 0;
  while (keep < sigma.size() && sigma(keep) > cutoff && sigma(keep) > 0.0) ++keep;
  Svd result;
  result.values.assign(sigma.data(), sigma.data() + keep);
  result.left = solver.matrixU().leftCols(keep);
  result.right = solver.matrixV().leftCols(keep);
  return result;
}

}  // namespace ggf
