#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hellinger/legendre_cex.hpp"

using namespace hellinger;
using namespace hellinger::legendre;
using hellinger::testing::dist;
using hellinger::testing::hdiag;

TEST_SUITE("legendre") {

TEST_CASE("parameters") {
  const CexParams d = CexParams::defaults();
  CHECK(d.gradient_at_zero() == doctest::Approx(2.4 * (1.0 - std::pow(5.0, 0.2) / 2.0)));
  CHECK(d.gradient_at_zero() == doctest::Approx(0.744324).epsilon(1e-6));
  CHECK_THROWS_AS(CexParams(3.0, 1.2), DomainError);
  CHECK_THROWS_AS(CexParams(5.0, 1.0), DomainError);
  // Valid ranges, wrong sign: N^{p-1} > 2.
  CHECK_THROWS_AS(CexParams(5.0, 2.0), DomainError);
  CHECK(CexParams::gradient_at_zero(5.0, 2.0) < 0.0);
}

TEST_CASE("vector instance") {
  const VectorInstance v = build_vector_instance(CexParams::defaults());
  CHECK(v.abar(0) == doctest::Approx(7.0 / 6.0));
  CHECK(v.abar(1) == doctest::Approx(1.0 / 3.0));
  CHECK(v.bbar(0) == doctest::Approx(1.0 / 3.0));
  const Vec2 ga = Vec2::Ones() + v.l * v.abar;
  CHECK(ga(0) == doctest::Approx(5.0));
  CHECK(std::abs(ga(1)) < 1e-14);
  for (double n : {3.5, 5.0, 10.0}) {
    const VectorInstance w = build_vector_instance(CexParams(n, 1.01));
    CHECK(w.abar.minCoeff() > 0.0);
    CHECK(w.bbar.minCoeff() > 0.0);
  }
}

TEST_CASE("vector gradient at zero") {
  const CexParams p = CexParams::defaults();
  const Vec2 g = grad_psibar_vector(p, Vec2::Zero());
  CHECK(g(0) == doctest::Approx(0.744324).epsilon(1e-6));
  CHECK(g(1) == doctest::Approx(g(0)));
  const double h = 1e-4;
  for (int i = 0; i < 2; ++i) {
    Vec2 e = Vec2::Zero();
    e(i) = h;
    const double fd = (psibar_vector(p, e) - psibar_vector(p, -e)) / (2 * h);
    CHECK(std::abs(fd - g(i)) <= 1e-6);
  }
}

TEST_CASE("vector strictness") {
  Rng rng(40);
  const StrictnessReport r = verify_vector_strictness(CexParams::defaults(), 1000, rng);
  CHECK(r.passed);
  CHECK(r.samples == 1000);
  CHECK(r.min_gap > 0.0);
  CHECK(r.min_gap_over_bound >= 1.0 - 1e-12);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("matrix maps") {
  const CexParams p = CexParams::defaults();
  CHECK(dist(apply_t(p, HermitianMatrix::identity(2)), HermitianMatrix::identity(2) * 2.0) < 1e-15);
  const MatrixMaps m = matrix_maps(p, hdiag({1, 0}));
  CHECK(dist(m.t, hdiag({4, -2})) < 1e-15);
  CHECK(dist(m.g, hdiag({5, -1})) < 1e-15);
  CHECK(dist(apply_t_inv(p, m.t), hdiag({1, 0})) < 1e-15);

  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const HermitianMatrix x = random_hermitian(rng, 2);
    CHECK(dist(apply_t_inv(p, apply_t(p, x)), x) <= 1e-12);
  }
  CHECK_THROWS_AS(apply_t(p, HermitianMatrix::identity(3)), DimensionError);
}

TEST_CASE("schatten gradient") {
  CHECK(dist(grad_schatten_p(HermitianMatrix::identity(2), 2.0), HermitianMatrix::identity(2) * 2.0) <
        1e-15);
  CHECK(dist(grad_schatten_p(hdiag({4, 9}), 1.5), hdiag({3, 4.5})) < 1e-14);
  CHECK(dist(grad_schatten_p(hdiag({4, 0}), 1.5), hdiag({3, 0})) < 1e-14);
  CHECK(dist(grad_schatten_p(hdiag({-4, 1}), 1.5), hdiag({-3, 1.5})) < 1e-14);
  CHECK(schatten_p_power(hdiag({-4, 9}), 1.5) == doctest::Approx(8.0 + 27.0));
  CHECK_THROWS_AS(grad_schatten_p(hdiag({1, 1}), 1.0), DomainError);
}

TEST_CASE("matrix gradient at zero and the full report") {
  const CexParams p = CexParams::defaults();
  const HermitianMatrix g = grad_psibar_matrix(p, HermitianMatrix::zero(2));
  CHECK(dist(g, HermitianMatrix::identity(2) * p.gradient_at_zero()) <= 1e-9);

  Rng rng(42);
  const MatrixCexReport r = verify_matrix_cex(p, 300, rng);
  CHECK(r.passed);
  CHECK(r.gradient_positive_definite);
  CHECK(r.min_psd_gap > 0.0);
  CHECK(r.min_stationarity_residual >= r.residual_lower_bound * (1.0 - 1e-8));
  CHECK(r.residual_lower_bound > 0.0);
}

}  // TEST_SUITE
