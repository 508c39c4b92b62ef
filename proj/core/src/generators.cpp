#include "ggf/generators.hpp"

#include <cmath>

#include "ggf/rng.hpp"
#include "ggf/spreading.hpp"
#include "ggf/tfcore.hpp"

namespace ggf {

Mat rank_one(const Vec& xi, const Vec& phi) {
  require_same_length(xi, phi, "rank_one");
  return xi * phi.adjoint();
}

Mat multiwindow_op(const WindowSet& ws) {
  if (ws.windows.empty()) throw DimMismatch("multiwindow_op: empty window set has no length");
  const int L = static_cast<int>(ws.windows.front().size());
  const int n = static_cast<int>(ws.windows.size());
  if (n > L) throw DimMismatch("multiwindow_op: more windows than dimensions");
  if (!ws.weights.empty() && ws.weights.size() != ws.windows.size()) {
    throw DimMismatch("multiwindow_op: weights and windows disagree in count");
  }
  Mat s = Mat::Zero(L, L);
  for (int i = 0; i < n; ++i) {
    if (ws.windows[i].size() != L) throw DimMismatch("multiwindow_op: windows have differing lengths");
    double w = ws.weights.empty() ? 1.0 : ws.weights[i];
    s.row(i) = w * ws.windows[i].adjoint();
  }
  return s;
}

Mat localization_op(const Mat& mask, const Vec& phi) {
  const int L = static_cast<int>(phi.size());
  if (mask.rows() != L || mask.cols() != L) throw DimMismatch("localization_op: mask must be L x L");
  if (phi.norm() == 0.0) throw DimMismatch("localization_op: window must be nonzero");
  Mat op = Mat::Zero(L, L);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      if (mask(k, l) == cplx(0.0, 0.0)) continue;
      Vec shifted = apply_tf_shift({k, l}, phi);
      op += mask(k, l) * (shifted * shifted.adjoint());
    }
  }
  return op / static_cast<double>(L);
}

MaskPartition partition_mask(const Lattice& lat, const RealMat& base) {
  const int L = lat.ambient();
  if (base.rows() != L || base.cols() != L) throw DimMismatch("partition_mask: mask must be L x L");
  if ((base.array() < 0.0).any()) throw DimMismatch("partition_mask: mask must be nonnegative");
  MaskPartition part;
  part.table = RealMat::Zero(L, L);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      double sum = 0.0;
      for (const auto& lambda : lat.points()) {
        sum += base(mod(k - lambda.k, L), mod(l - lambda.l, L));
      }
      part.table(k, l) = sum;
    }
  }
  part.lower = part.table.minCoeff();
  part.upper = part.table.maxCoeff();
  return part;
}

Mat underspread_op(const std::vector<PhasePoint>& support, const std::vector<cplx>& coeffs,
                   const Lattice& lat) {
  if (support.size() != coeffs.size()) {
    throw DimMismatch("underspread_op: support and coefficient counts differ");
  }
  const int L = lat.ambient();
  Lattice adj = lat.adjoint();
  for (const auto& z1 : support) {
    for (const auto& z2 : support) {
      PhasePoint diff = sub(reduce(z1, L), reduce(z2, L), L);
      if (diff != PhasePoint{0, 0} && adj.contains(diff)) {
        throw NotUnderspread(diff);
      }
    }
  }
  SpreadingCoeffs c{L, Mat::Zero(L, L)};
  for (std::size_t i = 0; i < support.size(); ++i) {
    PhasePoint z = reduce(support[i], L);
    c.table(z.k, z.l) += coeffs[i];
  }
  return synthesize(c);
}

WindowSet svd_to_multiwindow(const Mat& s) {
  Svd dec = svd(s);
  WindowSet ws;
  ws.weights = dec.values;
  ws.windows.reserve(dec.values.size());
  for (std::size_t n = 0; n < dec.values.size(); ++n) {
    ws.windows.push_back(dec.right.col(static_cast<Eigen::Index>(n)));
  }
  return ws;
}

Vec window_gaussian(int L) {
  if (L < 2) throw DimMismatch("window_gaussian: dimension must be at least 2");
  Vec g(L);
  for (int t = 0; t < L; ++t) {
    double sum = 0.0;
    for (int j = -8; j <= 8; ++j) {
      double x = t + static_cast<double>(j) * L;
      sum += std::exp(-M_PI * x * x / L);
    }
    g(t) = sum;
  }
  g.normalize();
  return g;
}

Vec window_box(int L, int width) {
  if (L < 2) throw DimMismatch("window_box: dimension must be at least 2");
  if (width < 1 || width > L) throw DimMismatch("window_box: width must lie in [1, L]");
  Vec b = Vec::Zero(L);
  b.head(width).setConstant(1.0 / std::sqrt(static_cast<double>(width)));
  return b;
}

Mat random_op(int L, int rank, std::uint64_t seed) {
  if (L < 2) throw DimMismatch("random_op: dimension must be at least 2");
  if (rank < 0 || rank > L) throw DimMismatch("random_op: rank must lie in [0, L]");
  Rng rng(seed);
  Mat s = rng.op(L, rank);
  double norm = s.norm();
  if (norm > 0) s /= norm;
  return s;
}

}  // namespace ggf
