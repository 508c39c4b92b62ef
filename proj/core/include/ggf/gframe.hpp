#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggf/lattice.hpp"
#include "ggf/types.hpp"

namespace ggf {

/// Result of a frame-bound computation. A and B are the extreme eigenvalues
/// of the g-frame operator; the residual fields cross-check the two central
/// identities (Janssen representation and canonical-dual reconstruction).
struct GFrameReport {
  int L = 0;
  std::string lattice;
  double lower = 0.0;      // A
  double upper = 0.0;      // B
  double tightness = kInf; // B/A, inf when A = 0
  bool is_frame = false;
  double janssen_residual = 0.0;
  double dual_residual = 0.0;  // NaN when not a frame
  std::uint64_t seed = 0;

  std::string to_kv() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// One signal per lattice point, in lattice enumeration order.
struct CoefSeq {
  Lattice lat;
  std::vector<Vec> vecs;
};

/// P_Lambda(S) = sum_{lambda in Lambda} alpha_lambda(S). The result is
/// Lambda-periodic. Summation follows the lattice enumeration order.
Mat periodize(const Mat& s, const Lattice& lat);

/// The g-frame operator sum_lambda alpha_lambda(S*S); Hermitian PSD, and
/// <op psi, psi> = sum_lambda ||alpha_lambda(S) psi||^2.
Mat gframe_operator(const Mat& s, const Lattice& lat);

/// Extreme eigenvalues of the g-frame operator plus identity residuals.
/// Throws Error if the Hermitian eigensolver does not converge.
GFrameReport frame_bounds(const Mat& s, const Lattice& lat);

/// C_S(psi) = { alpha_lambda(S) psi }.
CoefSeq analysis(const Mat& s, const Lattice& lat, const Vec& psi);

/// D_S({psi_lambda}) = sum_lambda alpha_lambda(S*) psi_lambda, the adjoint of
/// analysis.
Vec synthesis(const Mat& s, const Lattice& lat, const CoefSeq& c);

/// Canonical dual generator S (gframe_operator)^{-1}. The inverse is taken by
/// Hermitian eigendecomposition so it stays Hermitian to machine precision.
/// Throws NotAFrame when the lower bound fails the frame threshold.
Mat canonical_dual(const Mat& s, const Lattice& lat);

/// Janssen representation: card(Lambda) sum_{adjoint points} c_S(p) pi(p),
/// equal to periodize(s, lat) by the operator Poisson summation formula.
Mat janssen_rep(const Mat& s, const Lattice& lat);

struct WexlerRazResult {
  bool biorth_ok = false;
  bool recon_ok = false;
  /// max_{p in adjoint} |c_{S*T}(p) - delta_{p,0}/card|, the biorthogonality
  /// deviation, compared against 1e-9 * ||S*T||_HS.
  double biorth_deviation = 0.0;
  /// ||periodize(S*T) - I||_F / sqrt(L), compared against 1e-9.
  double recon_residual = 0.0;
};

/// Wexler-Raz biorthogonality test: reconstruction sum_lambda alpha_lambda(S*T) = I
/// holds iff the spreading of S*T restricted to the adjoint lattice is
/// delta_0 / card(Lambda). Both faces are evaluated independently.
WexlerRazResult wexler_raz_check(const Mat& s, const Mat& t, const Lattice& lat);

struct JanssenTest {
  bool passes = false;
  /// Neumann-series lower bound on the smallest eigenvalue of the g-frame
  /// operator, valid when passes is true.
  double guaranteed_lower = 0.0;
};

/// Sufficient frame test: passes iff the absolute spreading mass of S*S on
/// the nonzero adjoint points stays below the mass at the origin.
JanssenTest janssen_sufficient(const Mat& s, const Lattice& lat);

/// Stacked analysis matrix with blocks alpha_lambda(S), shape (card*L) x L.
Mat stacked_analysis_matrix(const Mat& s, const Lattice& lat);

/// True iff the stacked analysis matrix has full column rank (smallest
/// squared singular value above kFrameEps times the largest). Agrees with
/// frame_bounds().is_frame: injectivity of analysis characterizes frames.
bool injectivity_check(const Mat& s, const Lattice& lat);

/// Cohen's class map Q(z) = ||alpha_z(S) psi||^2 over the full phase space.
/// Sums to L ||S||_HS^2 ||psi||^2.
RealMat cohen_map(const Mat& s, const Vec& psi);

/// Inverse of a Hermitian positive definite matrix via eigendecomposition.
Mat hermitian_inverse(const Mat& h);

/// Inverse square root of a Hermitian positive definite matrix.
Mat hermitian_inv_sqrt(const Mat& h);

}  // namespace ggf
