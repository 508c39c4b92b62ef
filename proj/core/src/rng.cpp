#include "ggf/rng.hpp"

#include <cmath>

namespace ggf {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 is pushed into (0, 1] to keep the log finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Vec Rng::signal(int L) {
  Vec v(L);
  for (int t = 0; t < L; ++t) v(t) = complex_gaussian();
  return v;
}

Mat Rng::op(int L, int rank) {
  Mat s = Mat::Zero(L, L);
  for (int r = 0; r < rank; ++r) {
    Vec xi = signal(L);
    Vec phi = signal(L);
    s += xi * phi.adjoint();
  }
  return s;
}

}  // namespace ggf
