#include "ggf/seqspace.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "ggf/generators.hpp"
#include "ggf/rng.hpp"
#include "ggf/tfcore.hpp"

namespace ggf {

Weight Weight::constant(double value) {
  if (!(value > 0)) throw DimMismatch("weight: constant must be strictly positive");
  Weight w;
  w.kind_ = Kind::Constant;
  w.value_ = value;
  return w;
}

Weight Weight::polynomial(int L, double exponent) {
  if (L < 2) throw DimMismatch("weight: dimension must be at least 2");
  if (exponent < 0) throw DimMismatch("weight: polynomial exponent must be nonnegative");
  Weight w;
  w.kind_ = Kind::Polynomial;
  w.value_ = exponent;
  w.L_ = L;
  return w;
}

Weight Weight::table(RealMat values) {
  if (values.rows() != values.cols()) throw DimMismatch("weight: table must be square");
  if ((values.array() <= 0.0).any()) throw DimMismatch("weight: table must be strictly positive");
  Weight w;
  w.kind_ = Kind::Table;
  w.L_ = static_cast<int>(values.rows());
  w.values_ = std::move(values);
  return w;
}

double Weight::operator()(PhasePoint z) const {
  switch (kind_) {
    case Kind::Constant:
      return value_;
    case Kind::Polynomial: {
      double dk = std::min(mod(z.k, L_), L_ - mod(z.k, L_));
      double dl = std::min(mod(z.l, L_), L_ - mod(z.l, L_));
      return std::pow(1.0 + std::sqrt(dk * dk + dl * dl), value_);
    }
    case Kind::Table:
      return values_(mod(z.k, L_), mod(z.l, L_));
  }
  return 1.0;
}

Weight Weight::reciprocal() const {
  switch (kind_) {
    case Kind::Constant:
      return constant(1.0 / value_);
    case Kind::Polynomial: {
      RealMat values(L_, L_);
      for (int k = 0; k < L_; ++k) {
        for (int l = 0; l < L_; ++l) values(k, l) = 1.0 / (*this)({k, l});
      }
      return table(std::move(values));
    }
    case Kind::Table:
      return table(values_.cwiseInverse());
  }
  return *this;
}

double seq_norm(const CoefSeq& c, double p, const Weight& m) {
  if (!(p >= 1.0)) throw DimMismatch("seq_norm: exponent must be at least 1");
  const auto& pts = c.lat.points();
  if (c.vecs.size() != pts.size()) {
    throw DimMismatch("seq_norm: sequence length does not match lattice cardinality");
  }
  if (std::isinf(p)) {
    double sup = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      sup = std::max(sup, c.vecs[i].norm() * m(pts[i]));
    }
    return sup;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    sum += std::pow(c.vecs[i].norm() * m(pts[i]), p);
  }
  return std::pow(sum, 1.0 / p);
}

cplx holder_pairing(const CoefSeq& c, const CoefSeq& d) {
  if (!(c.lat == d.lat)) throw DimMismatch("holder_pairing: sequences belong to different lattices");
  if (c.vecs.size() != d.vecs.size()) throw DimMismatch("holder_pairing: sequence lengths differ");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < c.vecs.size(); ++i) {
    if (c.vecs[i].size() != d.vecs[i].size()) {
      throw DimMismatch("holder_pairing: entry lengths differ");
    }
    sum += inner(c.vecs[i], d.vecs[i]);
  }
  return sum;
}

double modulation_ref_norm(const Vec& psi, double p, const Weight& m, const Vec& window) {
  require_same_length(psi, window, "modulation_ref_norm");
  const int L = static_cast<int>(psi.size());
  Mat v = stft(psi, window);
  if (std::isinf(p)) {
    double sup = 0.0;
    for (int k = 0; k < L; ++k) {
      for (int l = 0; l < L; ++l) sup = std::max(sup, std::abs(v(k, l)) * m({k, l}));
    }
    return sup;
  }
  double sum = 0.0;
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) sum += std::pow(std::abs(v(k, l)) * m({k, l}), p);
  }
  return std::pow(sum, 1.0 / p);
}

NormEquivResult norm_equivalence_experiment(const Mat& s, const Lattice& lat, double p,
                                            const Weight& m, int probes, std::uint64_t seed,
                                            const Vec* reference_window) {
  if (!(p >= 1.0)) throw DimMismatch("norm_equivalence_experiment: exponent must be at least 1");
  const int L = lat.ambient();
  Vec window = reference_window ? *reference_window : window_gaussian(L);
  if (window.size() != L) {
    throw DimMismatch("norm_equivalence_experiment: reference window length differs from L");
  }

  NormEquivResult result;
  result.p = p;
  result.seed = seed;

  std::vector<Vec> probe_signals;
  probe_signals.reserve(static_cast<std::size_t>(probes) + 1);
  {
    Eigen::JacobiSVD<Mat> solver(stacked_analysis_matrix(s, lat), Eigen::ComputeThinV);
    probe_signals.push_back(solver.matrixV().col(L - 1));
  }
  Rng rng(seed);
  for (int i = 0; i < probes; ++i) probe_signals.push_back(rng.signal(L));

  result.c_emp = kInf;
  result.d_emp = 0.0;
  for (const auto& psi : probe_signals) {
    double ref = modulation_ref_norm(psi, p, m, window);
    double ratio = seq_norm(analysis(s, lat, psi), p, m) / ref;
    result.ratios.push_back(ratio);
    result.c_emp = std::min(result.c_emp, ratio);
    result.d_emp = std::max(result.d_emp, ratio);
  }
  return result;
}

}  // namespace ggf
