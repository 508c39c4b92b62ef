#include "ggf/gframe.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "dft.hpp"
#include "ggf/io.hpp"
#include "ggf/spreading.hpp"
#include "ggf/tfcore.hpp"

namespace ggf {

namespace {

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  Mat vectors;
};

HermitianEigen hermitian_eigen(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double relative_residual(const Mat& a, const Mat& b) {
  double denom = std::max(a.norm(), b.norm());
  return denom > 0 ? (a - b).norm() / denom : 0.0;
}

}  // namespace

Mat periodize(const Mat& s, const Lattice& lat) {
  require_square(s, "periodize");
  if (s.rows() != lat.ambient()) throw DimMismatch("periodize: operator and lattice dimensions differ");
  Mat sum = Mat::Zero(s.rows(), s.cols());
  for (const auto& lambda : lat.points()) {
    sum += translate_op(s, lambda);
  }
  return sum;
}

Mat gframe_operator(const Mat& s, const Lattice& lat) {
  return periodize(s.adjoint() * s, lat);
}

Mat janssen_rep(const Mat& s, const Lattice& lat) {
  require_square(s, "janssen_rep");
  const int L = static_cast<int>(s.rows());
  if (L != lat.ambient()) throw DimMismatch("janssen_rep: operator and lattice dimensions differ");
  SpreadingCoeffs c = spreading_of(s);
  Lattice adj = lat.adjoint();
  auto roots = detail::unit_roots(L);
  Mat out = Mat::Zero(L, L);
  const double card = lat.card();
  for (const auto& p : adj.points()) {
    cplx coeff = card * c.table(p.k, p.l);
    for (int x = 0; x < L; ++x) {
      out(x, mod(x - p.k, L)) += coeff * roots[mod(static_cast<long>(p.l) * x, L)];
    }
  }
  return out;
}

GFrameReport frame_bounds(const Mat& s, const Lattice& lat) {
  const int L = lat.ambient();
  Mat ss = s.adjoint() * s;
  Mat frame_op = periodize(ss, lat);
  HermitianEigen eig = hermitian_eigen(frame_op);
  GFrameReport report;
  report.L = L;
  report.lattice = lat.to_string();
  report.lower = std::max(0.0, eig.values(0));
  report.upper = std::max(0.0, eig.values(L - 1));
  report.is_frame = report.upper > 0 && report.lower > kFrameEps * report.upper;
  report.tightness = report.lower > 0 ? report.upper / report.lower : kInf;
  report.janssen_residual = relative_residual(frame_op, janssen_rep(ss, lat));
  if (report.is_frame) {
    Mat inv = eig.vectors * eig.values.cwiseInverse().asDiagonal() * eig.vectors.adjoint();
    Mat recon = periodize(s.adjoint() * (s * inv), lat);
    report.dual_residual = (recon - Mat::Identity(L, L)).norm() / std::sqrt(static_cast<double>(L));
  } else {
    report.dual_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

CoefSeq analysis(const Mat& s, const Lattice& lat, const Vec& psi) {
  require_square(s, "analysis");
  if (s.rows() != psi.size()) throw DimMismatch("analysis: operator and signal dimensions differ");
  if (s.rows() != lat.ambient()) throw DimMismatch("analysis: operator and lattice dimensions differ");
  CoefSeq out{lat, {}};
  out.vecs.reserve(lat.card());
  for (const auto& lambda : lat.points()) {
    out.vecs.push_back(apply_tf_shift(lambda, s * apply_tf_shift_adjoint(lambda, psi)));
  }
  return out;
}

Vec synthesis(const Mat& s, const Lattice& lat, const CoefSeq& c) {
  require_square(s, "synthesis");
  if (s.rows() != lat.ambient()) throw DimMismatch("synthesis: operator and lattice dimensions differ");
  if (!(c.lat == lat)) throw DimMismatch("synthesis: coefficient sequence belongs to a different lattice");
  if (static_cast<int>(c.vecs.size()) != lat.card()) {
    throw DimMismatch("synthesis: coefficient sequence length does not match lattice cardinality");
  }
  const int L = lat.ambient();
  Mat s_adj = s.adjoint();
  Vec out = Vec::Zero(L);
  for (int i = 0; i < lat.card(); ++i) {
    if (c.vecs[i].size() != L) throw DimMismatch("synthesis: coefficient entry has wrong length");
    const auto& lambda = lat.points()[i];
    out += apply_tf_shift(lambda, s_adj * apply_tf_shift_adjoint(lambda, c.vecs[i]));
  }
  return out;
}

Mat canonical_dual(const Mat& s, const Lattice& lat) {
  Mat frame_op = gframe_operator(s, lat);
  HermitianEigen eig = hermitian_eigen(frame_op);
  const int L = lat.ambient();
  double lmin = eig.values(0);
  double lmax = eig.values(L - 1);
  if (!(lmax > 0 && lmin > kFrameEps * lmax)) {
    throw NotAFrame("not-a-frame: lower bound " + std::to_string(lmin) +
                    " fails the frame threshold against upper bound " + std::to_string(lmax));
  }
  Mat inv = eig.vectors * eig.values.cwiseInverse().asDiagonal() * eig.vectors.adjoint();
  return s * inv;
}

WexlerRazResult wexler_raz_check(const Mat& s, const Mat& t, const Lattice& lat) {
  require_square(s, "wexler_raz_check");
  if (s.rows() != t.rows() || s.cols() != t.cols()) {
    throw DimMismatch("wexler_raz_check: operator dimensions differ");
  }
  const int L = lat.ambient();
  if (s.rows() != L) throw DimMismatch("wexler_raz_check: operator and lattice dimensions differ");
  Mat st = s.adjoint() * t;
  SpreadingCoeffs c = spreading_of(st);
  Lattice adj = lat.adjoint();
  WexlerRazResult result;
  const double card = lat.card();
  for (const auto& p : adj.points()) {
    cplx target = (p == PhasePoint{0, 0}) ? cplx(1.0 / card, 0.0) : cplx(0.0, 0.0);
    result.biorth_deviation = std::max(result.biorth_deviation, std::abs(c.table(p.k, p.l) - target));
  }
  result.biorth_ok = result.biorth_deviation <= 1e-9 * hs_norm(st);
  Mat recon = periodize(st, lat);
  result.recon_residual = (recon - Mat::Identity(L, L)).norm() / std::sqrt(static_cast<double>(L));
  result.recon_ok = result.recon_residual <= 1e-9;
  return result;
}

JanssenTest janssen_sufficient(const Mat& s, const Lattice& lat) {
  SpreadingCoeffs c = spreading_of(s.adjoint() * s);
  Lattice adj = lat.adjoint();
  double origin = c.table(0, 0).real();
  double tail = 0.0;
  for (const auto& p : adj.points()) {
    if (p == PhasePoint{0, 0}) continue;
    tail += std::abs(c.table(p.k, p.l));
  }
  JanssenTest test;
  test.passes = tail < origin;
  test.guaranteed_lower = test.passes ? lat.card() * (origin - tail) : 0.0;
  return test;
}

Mat stacked_analysis_matrix(const Mat& s, const Lattice& lat) {
  require_square(s, "stacked_analysis_matrix");
  const int L = lat.ambient();
  if (s.rows() != L) throw DimMismatch("stacked_analysis_matrix: operator and lattice dimensions differ");
  Mat stacked(static_cast<Eigen::Index>(lat.card()) * L, L);
  for (int i = 0; i < lat.card(); ++i) {
    stacked.middleRows(static_cast<Eigen::Index>(i) * L, L) = translate_op(s, lat.points()[i]);
  }
  return stacked;
}

bool injectivity_check(const Mat& s, const Lattice& lat) {
  Eigen::JacobiSVD<Mat> solver(stacked_analysis_matrix(s, lat));
  const auto& sigma = solver.singularValues();
  double smax = sigma(0);
  double smin = sigma(sigma.size() - 1);
  return smax > 0 && smin * smin > kFrameEps * smax * smax;
}

RealMat cohen_map(const Mat& s, const Vec& psi) {
  require_square(s, "cohen_map");
  if (s.rows() != psi.size()) throw DimMismatch("cohen_map: operator and signal dimensions differ");
  const int L = static_cast<int>(s.rows());
  RealMat q(L, L);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      // ||alpha_z(S) psi|| = ||S pi(z)* psi|| since pi(z) is unitary.
      q(k, l) = (s * apply_tf_shift_adjoint({k, l}, psi)).squaredNorm();
    }
  }
  return q;
}

Mat hermitian_inverse(const Mat& h) {
  HermitianEigen eig = hermitian_eigen(h);
  double lmax = eig.values(eig.values.size() - 1);
  if (!(lmax > 0 && eig.values(0) > kFrameEps * lmax)) {
    throw Error("hermitian_inverse: matrix is numerically singular");
  }
  return eig.vectors * eig.values.cwiseInverse().asDiagonal() * eig.vectors.adjoint();
}

Mat hermitian_inv_sqrt(const Mat& h) {
  HermitianEigen eig = hermitian_eigen(h);
  double lmax = eig.values(eig.values.size() - 1);
  if (!(lmax > 0 && eig.values(0) > kFrameEps * lmax)) {
    throw Error("hermitian_inv_sqrt: matrix is numerically singular");
  }
  return eig.vectors * eig.values.cwiseSqrt().cwiseInverse().asDiagonal() * eig.vectors.adjoint();
}

std::string GFrameReport::to_kv() const {
  std::ostringstream out;
  out << "L=" << L << '\n'
      << "lattice=" << lattice << '\n'
      << "A=" << format_double(lower) << '\n'
      << "B=" << format_double(upper) << '\n'
      << "tightness=" << format_double(tightness) << '\n'
      << "janssen_residual=" << format_double(janssen_residual) << '\n'
      << "dual_residual=" << format_double(dual_residual) << '\n'
      << "is_frame=" << (is_frame ? "true" : "false") << '\n'
      << "seed=" << seed << '\n';
  return out.str();
}

std::string GFrameReport::csv_header() {
  return "L,lattice,A,B,tightness,janssen_residual,dual_residual,is_frame,seed";
}

std::string GFrameReport::to_csv_row() const {
  std::ostringstream out;
  out << L << ",\"" << lattice << "\"," << format_double(lower) << ',' << format_double(upper)
      << ',' << format_double(tightness) << ',' << format_double(janssen_residual) << ','
      << format_double(dual_residual) << ',' << (is_frame ? "true" : "false") << ',' << seed;
  return out.str();
}

}  // namespace ggf
