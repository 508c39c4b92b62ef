#pragma once

#include <cstdint>
#include <vector>

#include "ggf/gframe.hpp"
#include "ggf/types.hpp"

namespace ggf {

/// Strictly positive weight function on Z_L x Z_L. Polynomial weights are
/// (1 + d(z))^s with the wrap-around distance d(z) =
/// sqrt(min(k, L-k)^2 + min(l, L-l)^2), so they respect the mod-L geometry.
class Weight {
 public:
  static Weight constant(double value = 1.0);
  static Weight polynomial(int L, double exponent);
  static Weight table(RealMat values);

  double operator()(PhasePoint z) const;
  Weight reciprocal() const;

 private:
  enum class Kind { Constant, Polynomial, Table };
  Kind kind_ = Kind::Constant;
  double value_ = 1.0;  // constant value or polynomial exponent
  int L_ = 0;
  RealMat values_;
};

/// Weighted norm (sum_lambda ||c_lambda||^p m(lambda)^p)^{1/p}; p = inf takes
/// the weighted supremum. Requires p >= 1.
double seq_norm(const CoefSeq& c, double p, const Weight& m);

/// Duality pairing sum_lambda <c_lambda, d_lambda>, linear in the first
/// sequence. Bounded by seq_norm(c, p', 1/m) * seq_norm(d, p, m).
cplx holder_pairing(const CoefSeq& c, const CoefSeq& d);

/// Reference norm for the norm-equivalence experiment: the full-grid weighted
/// l^p norm of the STFT of psi against the given window.
double modulation_ref_norm(const Vec& psi, double p, const Weight& m, const Vec& window);

struct NormEquivResult {
  double c_emp = 0.0;  // min probe ratio
  double d_emp = 0.0;  // max probe ratio
  std::vector<double> ratios;
  double p = 2.0;
  std::uint64_t seed = 0;
};

/// Empirical norm-equivalence constants: ratios of the weighted analysis norm
/// to the reference modulation norm over seeded random probes. Probe 0 is
/// always the smallest right singular vector of the stacked analysis matrix,
/// which drives the ratio toward zero when S is not a frame. The reference
/// window defaults to the periodized Gaussian.
NormEquivResult norm_equivalence_experiment(const Mat& s, const Lattice& lat, double p,
                                            const Weight& m, int probes, std::uint64_t seed,
                                            const Vec* reference_window = nullptr);

}  // namespace ggf
