#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace ggf {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;      // a signal: complex amplitudes indexed by t in Z_L
using Mat = Eigen::MatrixXcd;      // an operator: dense L x L kernel, entry (x,y) = k(x,y)
using RealMat = Eigen::MatrixXd;   // real phase-space tables (masks, Cohen maps, weights)

/// Frame decision threshold: a generator counts as a frame when the smallest
/// eigenvalue of its g-frame operator exceeds kFrameEps times the largest.
inline constexpr double kFrameEps = 1e-10;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A point (k,l) of the finite phase space Z_L x Z_L: time shift k, frequency
/// shift l. Stored values are canonical representatives in [0, L).
struct PhasePoint {
  int k = 0;
  int l = 0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
  friend auto operator<=>(const PhasePoint&, const PhasePoint&) = default;
};

inline int mod(long v, int L) {
  long r = v % L;
  return static_cast<int>(r < 0 ? r + L : r);
}

inline PhasePoint reduce(PhasePoint z, int L) { return {mod(z.k, L), mod(z.l, L)}; }

inline PhasePoint add(PhasePoint a, PhasePoint b, int L) {
  return {mod(static_cast<long>(a.k) + b.k, L), mod(static_cast<long>(a.l) + b.l, L)};
}

inline PhasePoint sub(PhasePoint a, PhasePoint b, int L) {
  return {mod(static_cast<long>(a.k) - b.k, L), mod(static_cast<long>(a.l) - b.l, L)};
}

inline PhasePoint negate(PhasePoint z, int L) { return {mod(-static_cast<long>(z.k), L), mod(-static_cast<long>(z.l), L)}; }

std::string to_string(PhasePoint z);

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or length disagreement between signals/operators.
class DimMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (file formats, lattice specs, configs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operator expected to be Lambda-periodic is not; carries the
/// offending lattice point and its relative residual.
class NotPeriodic : public Error {
 public:
  NotPeriodic(PhasePoint lambda, double residual);
  PhasePoint lambda;
  double residual;
};

/// Raised when a frame-only operation is applied to a non-frame generator.
class NotAFrame : public Error {
 public:
  using Error::Error;
};

/// Raised when a requested spreading support violates the underspread
/// condition; carries the offending difference point.
class NotUnderspread : public Error {
 public:
  explicit NotUnderspread(PhasePoint difference);
  PhasePoint difference;
};

/// Inner product, linear in the first slot: <a,b> = sum a(t) conj(b(t)).
inline cplx inner(const Vec& a, const Vec& b) { return b.dot(a); }

/// Hilbert-Schmidt inner product tr(S T*) = sum_{xy} S(x,y) conj(T(x,y)).
inline cplx hs_inner(const Mat& s, const Mat& t) { return (s.array() * t.array().conjugate()).sum(); }

inline double hs_norm(const Mat& s) { return s.norm(); }

inline void require_square(const Mat& s, const char* what) {
  if (s.rows() != s.cols()) throw DimMismatch(std::string(what) + ": operator matrix must be square");
}

inline void require_same_length(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size()) throw DimMismatch(std::string(what) + ": signal lengths differ");
}

}  // namespace ggf
