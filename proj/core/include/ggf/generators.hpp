#pragma once

#include <cstdint>
#include <vector>

#include "ggf/lattice.hpp"
#include "ggf/types.hpp"

namespace ggf {

/// A family of windows with positive weights (descending when produced by
/// the singular value decomposition). All windows share one length.
struct WindowSet {
  std::vector<Vec> windows;
  std::vector<double> weights;  // empty means all ones
};

/// xi (x) phi, the rank-one operator with kernel xi(x) conj(phi(y)).
Mat rank_one(const Vec& xi, const Vec& phi);

/// S = sum_n weights[n] e_n (x) windows[n] with standard basis vectors e_n as
/// the orthonormal system; generates the multi-window Gabor system of the
/// windows. Requires at most L windows.
Mat multiwindow_op(const WindowSet& ws);

/// Localization operator A = (1/L) sum_z mask(z) (pi(z) phi) (x) (pi(z) phi).
/// The 1/L normalization makes mask = 1 with a unit window the identity.
/// Hermitian whenever the mask is real. Requires a nonzero window.
Mat localization_op(const Mat& mask, const Vec& phi);

struct MaskPartition {
  RealMat table;  // sum_lambda base(z - lambda)
  double lower = 0.0;
  double upper = 0.0;
};

/// Lambda-periodization of a nonnegative phase-space mask with its extreme
/// values; lower > 0 is the covering condition that makes the matching
/// localization operator generate a g-frame.
MaskPartition partition_mask(const Lattice& lat, const RealMat& base);

/// Operator synthesized from spreading coefficients on the given support.
/// Requires the difference set of the support to meet the adjoint lattice
/// only at 0 (throws NotUnderspread otherwise); the result then generates a
/// tight g-frame with A = B = card(Lambda) ||S||_HS^2 / L.
Mat underspread_op(const std::vector<PhasePoint>& support, const std::vector<cplx>& coeffs,
                   const Lattice& lat);

/// Windows and weights from the singular value decomposition of S; the
/// g-frame of S has the same bounds as the weighted multi-window system.
WindowSet svd_to_multiwindow(const Mat& s);

/// Unit-norm periodized Gaussian sum_j exp(-pi (t + j L)^2 / L).
Vec window_gaussian(int L);

/// Unit-norm indicator of [0, width). Requires width in [1, L].
Vec window_box(int L, int width);

/// Unit HS norm sum of `rank` seeded random rank-one operators.
Mat random_op(int L, int rank, std::uint64_t seed);

}  // namespace ggf
