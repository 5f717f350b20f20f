#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hellinger/linalg.hpp"
#include "hellinger/random.hpp"

using namespace hellinger;
using hellinger::testing::diag;
using hellinger::testing::dist;

TEST_SUITE("linalg") {

TEST_CASE("eigh on diagonal input keeps the standard basis") {
  const EigenDecomposition e = eigh(diag({1, 4}));
  CHECK(e.values(0) == doctest::Approx(1.0));
  CHECK(e.values(1) == doctest::Approx(4.0));
  CHECK(dist(e.vectors.cwiseAbs().cast<Complex>(), Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("eigh on the exchange matrix") {
  RealMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const EigenDecomposition e = eigh(HermitianMatrix::from_real(x));
  CHECK(e.values(0) == doctest::Approx(-1.0));
  CHECK(e.values(1) == doctest::Approx(1.0));
}

TEST_CASE("eigh reconstructs random Hermitian matrices") {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const HermitianMatrix h = random_hermitian(rng, 5);
    const EigenDecomposition e = eigh(h);
    CHECK(dist(e.reconstruct(), h.matrix()) <= 1e-10);
    CHECK(dist(e.vectors.adjoint() * e.vectors, Matrix::Identity(5, 5)) <= 1e-12);
  }
}

TEST_CASE("HermitianMatrix rejects non-Hermitian and non-finite input") {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianMatrix{m}, NotHermitianError);
  m(0, 1) = std::nan("");
  CHECK_THROWS_AS(HermitianMatrix{m}, NotHermitianError);
  CHECK_THROWS_AS(HermitianMatrix{Matrix::Identity(2, 3)}, DimensionError);
}

TEST_CASE("SpdMatrix rejects indefinite and singular input") {
  RealMatrix m(2, 2);
  m << 1, 2, 2, 1;
  CHECK_THROWS_AS(SpdMatrix::from_real(m), NotPositiveDefiniteError);
  m << 1, 0, 0, 0;
  CHECK_THROWS_AS(SpdMatrix::from_real(m), NotPositiveDefiniteError);
  CHECK_FALSE(is_positive_definite(HermitianMatrix::from_real(m)));
}

TEST_CASE("apply_spectral") {
  CHECK(dist(apply_spectral([](double x) { return std::sqrt(x); }, diag({4, 9}).hermitian()),
             diag({2, 3}).hermitian()) < 1e-14);
  CHECK(logm(SpdMatrix::identity(3)).matrix().norm() < 1e-15);

  Rng rng(3);
  const SpdMatrix a = random_spd(rng, 4, 100.0);
  const HermitianMatrix sq = apply_spectral([](double x) { return x * x; }, a.eigen());
  CHECK(dist(sq.matrix(), a.matrix() * a.matrix()) <= 1e-10 * a.matrix().squaredNorm());

  RealMatrix m(2, 2);
  m << -1, 0, 0, 2;
  CHECK_THROWS_AS(apply_spectral([](double x) { return std::log(x); },
                                 HermitianMatrix::from_real(m)),
                  DomainError);
}

TEST_CASE("matrix functions are mutually consistent") {
  Rng rng(11);
  const SpdMatrix a = random_spd(rng, 4, 50.0);
  const Matrix s = sqrtm(a).matrix();
  CHECK(dist(s * s, a.matrix()) < 1e-12 * a.matrix().norm());
  CHECK(dist(inv_sqrtm(a).matrix() * s, Matrix::Identity(4, 4)) < 1e-12);
  CHECK(dist(inverse(a).matrix() * a.matrix(), Matrix::Identity(4, 4)) < 1e-12);
  CHECK(dist(expm(logm(a)).matrix(), a.matrix()) < 1e-12 * a.matrix().norm());
  CHECK(dist(powm(a, 0.5).matrix(), s) < 1e-12);
}

TEST_CASE("product_sqrt") {
  CHECK(dist(product_sqrt(SpdMatrix::identity(2), SpdMatrix::identity(2)),
             Matrix::Identity(2, 2)) < 1e-14);
  CHECK(dist(product_sqrt(diag({1, 4}), diag({9, 16})), diag({3, 8}).matrix()) < 1e-13);

  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const SpdMatrix a = random_spd(rng, 4), b = random_spd(rng, 4);
    const Matrix r = product_sqrt(a, b);
    const Matrix ab = a.matrix() * b.matrix();
    CHECK(dist(r * r, ab) <= 1e-9 * ab.norm());
  }
}

TEST_CASE("congruence") {
  Rng rng(2);
  const SpdMatrix a = random_spd(rng, 3);
  CHECK(dist(congruence(Matrix::Identity(3, 3), a).matrix(), a.matrix()) < 1e-14);
  CHECK(dist(congruence(2.0 * Matrix::Identity(3, 3), a).matrix(), 4.0 * a.matrix()) < 1e-13);
  CHECK(dist(congruence(inv_sqrtm(a).matrix(), a).matrix(), Matrix::Identity(3, 3)) < 1e-12);

  Matrix singular = Matrix::Identity(3, 3);
  singular(2, 2) = 0.0;
  CHECK_THROWS_AS(congruence(singular, a), DomainError);
  CHECK_THROWS_AS(congruence(Matrix::Identity(2, 2), a), DimensionError);
}

TEST_CASE("frobenius_inner") {
  CHECK(frobenius_inner(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(2, 2))) ==
        Complex(2.0, 0.0));
  CHECK(frobenius_inner(diag({1, 2}).hermitian(), diag({3, 4}).hermitian()) ==
        doctest::Approx(11.0));

  Rng rng(9);
  const Matrix g = random_gaussian(rng, 4, 4);
  double sum = 0.0;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) sum += std::norm(g(i, j));
  CHECK(std::abs(frobenius_inner(g, g) - Complex(sum, 0.0)) <= 1e-12 * sum);
  CHECK_THROWS_AS(frobenius_inner(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(3, 3))),
                  DimensionError);
}

TEST_CASE("commutator_norm vanishes for commuting pairs") {
  CHECK(commutator_norm(diag({1, 2}).matrix(), diag({5, 7}).matrix()) == 0.0);
  RealMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(commutator_norm(diag({1, 2}).matrix(), x.cast<Complex>()) > 0.0);
}

}  // TEST_SUITE
