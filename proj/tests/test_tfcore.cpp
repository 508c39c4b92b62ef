#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ggf/rng.hpp"
#include "ggf/tfcore.hpp"
#include "oracles.hpp"

using namespace ggf;

namespace {

Vec basis_vector(int L, int i) {
  Vec e = Vec::Zero(L);
  e(i) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("tf_shift at the origin is the identity") {
  for (int L : {2, 5, 8}) {
    CHECK((tf_shift(L, {0, 0}) - Mat::Identity(L, L)).norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("tf_shift by (1,0) cyclically translates basis vectors") {
  Mat pi = tf_shift(4, {1, 0});
  CHECK((pi * basis_vector(4, 0) - basis_vector(4, 1)).norm() == doctest::Approx(0.0));
  CHECK((pi * basis_vector(4, 3) - basis_vector(4, 0)).norm() == doctest::Approx(0.0));
}

TEST_CASE("tf_shift reduces negative inputs mod L") {
  CHECK((tf_shift(6, {-1, -2}) - tf_shift(6, {5, 4})).norm() == doctest::Approx(0.0));
}

TEST_CASE("tf_shift matches the first-principles construction") {
  for (int L : {2, 3, 5, 8}) {
    for (int k = 0; k < L; ++k) {
      for (int l = 0; l < L; ++l) {
        CHECK((tf_shift(L, {k, l}) - oracle::tf_shift(L, {k, l})).norm() < 1e-13 * L);
      }
    }
  }
}

TEST_CASE("tf_shift is unitary for every phase point, L <= 8") {
  for (int L = 2; L <= 8; ++L) {
    for (int k = 0; k < L; ++k) {
      for (int l = 0; l < L; ++l) {
        Mat pi = tf_shift(L, {k, l});
        CHECK((pi * pi.adjoint() - Mat::Identity(L, L)).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("adjoint phase law pi(z)* = e^{-2 pi i k l / L} pi(-z)") {
  for (int L : {4, 5, 7}) {
    for (int k = 0; k < L; ++k) {
      for (int l = 0; l < L; ++l) {
        Mat lhs = tf_shift(L, {k, l}).adjoint();
        Mat rhs = std::polar(1.0, -2.0 * M_PI * k * l / L) * tf_shift(L, {-k, -l});
        CHECK((lhs - rhs).norm() < 1e-12);
      }
    }
  }
}

TEST_CASE("commutator phase equals the symplectic character at L = 5") {
  const int L = 5;
  for (int k1 = 0; k1 < L; ++k1)
    for (int l1 = 0; l1 < L; ++l1)
      for (int k2 = 0; k2 < L; ++k2)
        for (int l2 = 0; l2 < L; ++l2) {
          Mat left = tf_shift(L, {k1, l1}) * tf_shift(L, {k2, l2});
          Mat right = tf_shift(L, {k2, l2}) * tf_shift(L, {k1, l1});
          cplx phase = std::polar(1.0, 2.0 * M_PI * symplectic_form({k1, l1}, {k2, l2}, L) / L);
          CHECK((left - phase * right).norm() < 1e-12);
        }
}

TEST_CASE("stft against itself at the origin gives the squared norm") {
  Rng rng(7);
  Vec psi = rng.signal(8);
  Mat v = stft(psi, psi);
  CHECK(std::abs(v(0, 0) - cplx(psi.squaredNorm(), 0.0)) < 1e-12 * psi.squaredNorm());
}

TEST_CASE("stft of the basis vector against itself is delta_{k,0}") {
  const int L = 6;
  Mat v = stft(basis_vector(L, 0), basis_vector(L, 0));
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      CHECK(std::abs(v(k, l) - (k == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-14);
    }
  }
}

TEST_CASE("stft FFT path agrees with the direct definition") {
  Rng rng(11);
  for (int L : {5, 8, 12}) {
    Vec psi = rng.signal(L);
    Vec phi = rng.signal(L);
    CHECK((stft(psi, phi) - oracle::stft(psi, phi)).norm() < 1e-12 * psi.norm() * phi.norm() * L);
  }
}

TEST_CASE("stft rejects mismatched lengths") {
  CHECK_THROWS_AS(stft(Vec::Zero(4), Vec::Zero(5)), DimMismatch);
}

TEST_CASE("discrete Moyal identity with constant L") {
  Rng rng(13);
  const int L = 8;
  for (int trial = 0; trial < 5; ++trial) {
    Vec psi1 = rng.signal(L), psi2 = rng.signal(L);
    Vec phi1 = rng.signal(L), phi2 = rng.signal(L);
    Mat v1 = stft(psi1, phi1), v2 = stft(psi2, phi2);
    cplx lhs = hs_inner(v1, v2);
    cplx rhs = static_cast<double>(L) * inner(psi1, psi2) * std::conj(inner(phi1, phi2));
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs) + 1e-10);
  }
}

TEST_CASE("Moyal: summed squared stft equals L ||psi||^2 ||phi||^2") {
  Rng rng(17);
  const int L = 8;
  Vec psi = rng.signal(L), phi = rng.signal(L);
  double sum = stft(psi, phi).squaredNorm();
  double expected = L * psi.squaredNorm() * phi.squaredNorm();
  CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("translate_op fixes the identity") {
  Mat id = Mat::Identity(6, 6);
  CHECK((translate_op(id, {2, 5}) - id).norm() < 1e-14);
}

TEST_CASE("translate_op on rank-one operators shifts both factors") {
  Rng rng(19);
  const int L = 6;
  Vec psi = rng.signal(L), phi = rng.signal(L);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      Mat lhs = translate_op(psi * phi.adjoint(), {k, l});
      Vec ps = apply_tf_shift({k, l}, psi);
      Vec ph = apply_tf_shift({k, l}, phi);
      CHECK((lhs - ps * ph.adjoint()).norm() < 1e-12 * psi.norm() * phi.norm());
    }
  }
}

TEST_CASE("translate_op is an HS isometry for all shifts at L = 5") {
  Rng rng(23);
  Mat s = rng.op(5, 5);
  for (int k = 0; k < 5; ++k) {
    for (int l = 0; l < 5; ++l) {
      CHECK(translate_op(s, {k, l}).norm() == doctest::Approx(s.norm()).epsilon(1e-12));
    }
  }
}

TEST_CASE("translate_op is multiplicative") {
  Rng rng(29);
  const int L = 6;
  Mat s = rng.op(L, L), t = rng.op(L, L);
  PhasePoint z{2, 5};
  CHECK((translate_op(s * t, z) - translate_op(s, z) * translate_op(t, z)).norm() <
        1e-12 * s.norm() * t.norm());
}

TEST_CASE("translate_op agrees with explicit conjugation") {
  Rng rng(31);
  const int L = 7;
  Mat s = rng.op(L, 3);
  for (int k = 0; k < L; ++k) {
    for (int l = 0; l < L; ++l) {
      Mat pi = oracle::tf_shift(L, {k, l});
      CHECK((translate_op(s, {k, l}) - pi * s * pi.adjoint()).norm() < 1e-12 * s.norm());
    }
  }
}

TEST_CASE("rank-one kernel law: matrix of phi (x) psi is phi(x) conj(psi(y))") {
  Rng rng(37);
  const int L = 5;
  Vec phi = rng.signal(L), psi = rng.signal(L);
  Mat m = phi * psi.adjoint();
  for (int x = 0; x < L; ++x) {
    for (int y = 0; y < L; ++y) {
      CHECK(std::abs(m(x, y) - phi(x) * std::conj(psi(y))) < 1e-14);
    }
  }
}

TEST_CASE("apply_tf_shift matches the matrix action, adjoint included") {
  Rng rng(41);
  const int L = 9;
  Vec psi = rng.signal(L);
  for (int k = 0; k < L; k += 2) {
    for (int l = 0; l < L; l += 3) {
      Mat pi = tf_shift(L, {k, l});
      CHECK((apply_tf_shift({k, l}, psi) - pi * psi).norm() < 1e-13 * psi.norm());
      CHECK((apply_tf_shift_adjoint({k, l}, psi) - pi.adjoint() * psi).norm() < 1e-13 * psi.norm());
    }
  }
}

TEST_CASE("svd of a unit rank-one operator") {
  Rng rng(43);
  Vec phi = rng.signal(6);
  phi.normalize();
  Svd dec = svd(phi * phi.adjoint());
  REQUIRE(dec.values.size() == 1);
  CHECK(dec.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  // Left and right vectors match phi up to a common phase.
  cplx phase = inner(dec.left.col(0), phi);
  CHECK((dec.left.col(0) - phase * phi).norm() < 1e-12);
  CHECK((dec.right.col(0) - phase * phi).norm() < 1e-12);
}

TEST_CASE("svd of zero is empty") {
  Svd dec = svd(Mat::Zero(5, 5));
  CHECK(dec.values.empty());
}

TEST_CASE("singular values reproduce trace and Frobenius norms") {
  Rng rng(47);
  Mat s = rng.op(8, 8);
  Svd dec = svd(s);
  double sum = 0.0, sum_sq = 0.0;
  Mat recon = Mat::Zero(8, 8);
  for (std::size_t n = 0; n < dec.values.size(); ++n) {
    sum += dec.values[n];
    sum_sq += dec.values[n] * dec.values[n];
    recon += dec.values[n] * dec.left.col(n) * dec.right.col(n).adjoint();
  }
  // Trace norm via the positive square root of S*S.
  Eigen::JacobiSVD<Mat> ref(s);
  double trace_norm = ref.singularValues().sum();
  CHECK(sum == doctest::Approx(trace_norm).epsilon(1e-10));
  CHECK(sum_sq == doctest::Approx(s.squaredNorm()).epsilon(1e-10));
  CHECK((recon - s).norm() < 1e-10 * s.norm());
}
