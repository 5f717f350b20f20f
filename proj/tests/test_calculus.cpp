#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hellinger/calculus.hpp"
#include "hellinger/distances.hpp"
#include "hellinger/means.hpp"
#include "hellinger/numdiff.hpp"
#include "hellinger/quadrature.hpp"
#include "hellinger/random.hpp"

using namespace hellinger;
using hellinger::testing::diag;
using hellinger::testing::dist;
using hellinger::testing::hdiag;

namespace {

double rel(const HermitianMatrix& got, const Matrix& want) {
  return (got.matrix() - want).norm() / std::max(1.0, want.norm());
}

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("divided differences") {
  const SpectralFunction s = SpectralFunction::sqrt();
  CHECK(s.divided_difference(4.0, 9.0) == doctest::Approx(0.2));
  CHECK(s.divided_difference(4.0, 4.0) == doctest::Approx(0.25));
  const SpectralFunction l = SpectralFunction::log();
  CHECK(l.divided_difference(1.0, 1.0 + 1e-12) == doctest::Approx(1.0));
  CHECK(l.divided_difference(1.0, std::exp(1.0)) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)));
  const SpectralFunction e = SpectralFunction::exp();
  CHECK(e.divided_difference(2.0, 2.0) == doctest::Approx(std::exp(2.0)));
  CHECK(SpectralFunction::power(3.0).divided_difference(1.0, 2.0) == doctest::Approx(7.0));
}

TEST_CASE("frechet at the identity") {
  Rng rng(20);
  const HermitianMatrix y = random_hermitian(rng, 3);
  const SpdMatrix id = SpdMatrix::identity(3);
  CHECK(rel(frechet(SpectralFunction::sqrt(), id, y), 0.5 * y.matrix()) < 1e-15);
  CHECK(rel(frechet(SpectralFunction::log(), id, y), y.matrix()) < 1e-15);
  CHECK(rel(frechet(SpectralFunction::exp(), id.hermitian(), y), std::exp(1.0) * y.matrix()) <
        1e-14);
  CHECK_THROWS_AS(frechet(SpectralFunction::sqrt(), id, random_hermitian(rng, 2)), DimensionError);
}

TEST_CASE("frechet matches finite differences") {
  Rng rng(21);
  for (int k = 0; k < 10; ++k) {
    const SpdMatrix x = random_spd(rng, 4, 20.0);
    const HermitianMatrix y = random_hermitian(rng, 4);
    const double h = 1e-3 * x.min_eigenvalue();
    const auto at = [&](double t) {
      return HermitianMatrix::symmetrized(x.matrix() + t * y.matrix());
    };
    const Matrix fd_sqrt = numdiff::central_richardson(
        [&](double t) { return Matrix(sqrtm(SpdMatrix(at(t))).matrix()); }, h);
    const Matrix fd_log = numdiff::central_richardson(
        [&](double t) { return Matrix(logm(SpdMatrix(at(t))).matrix()); }, h);
    CHECK(rel(frechet(SpectralFunction::sqrt(), x, y), fd_sqrt) <= 1e-6);
    CHECK(rel(frechet(SpectralFunction::log(), x, y), fd_log) <= 1e-6);
  }
}

TEST_CASE("frechet_geometric") {
  Rng rng(22);
  const SpdMatrix a = random_spd(rng, 3), x = random_spd(rng, 3);
  const HermitianMatrix y = random_hermitian(rng, 3);
  CHECK(rel(frechet_geometric(a, a, y), 0.5 * y.matrix()) < 1e-12);
  CHECK(dist(frechet_geometric(SpdMatrix::identity(3), x, y),
             frechet(SpectralFunction::sqrt(), x, y)) < 1e-12);
  CHECK(rel(frechet_geometric(a, x, y), frechet_geometric_quadrature(a, x, y).matrix()) <= 1e-7);

  const Matrix fd = numdiff::central_richardson(
      [&](double t) {
        return Matrix(
            geometric_mean(a, SpdMatrix(HermitianMatrix::symmetrized(x.matrix() + t * y.matrix())))
                .matrix());
      },
      1e-3 * x.min_eigenvalue());
  CHECK(rel(frechet_geometric(a, x, y), fd) <= 1e-6);
}

TEST_CASE("grad_phi3") {
  Rng rng(23);
  const SpdMatrix a = random_spd(rng, 3);
  CHECK(grad_phi3(a, a).matrix().norm() <= 1e-12);
  const HermitianMatrix g = grad_phi3(diag({1, 9}), diag({4, 4}));
  CHECK(dist(g, hdiag({1 - std::sqrt(1.0 / 4.0), 1 - std::sqrt(9.0 / 4.0)})) < 1e-14);
}

TEST_CASE("hessian of phi3 on the diagonal") {
  CHECK(hessian_phi3_diag(SpdMatrix::identity(2), HermitianMatrix::identity(2)) ==
        doctest::Approx(1.0));
  CHECK(hessian_phi3_diag(diag({1, 2}), HermitianMatrix::identity(2)) == doctest::Approx(0.75));
}

TEST_CASE("gradient of tr L(A, X)") {
  CHECK(dist(d_tr_log_euclidean(SpdMatrix::identity(2), SpdMatrix::identity(2)),
             HermitianMatrix::identity(2) * 0.5) < 1e-15);
  const HermitianMatrix g = d_tr_log_euclidean(diag({1, 9}), diag({4, 4}));
  CHECK(dist(g, hdiag({0.5 * std::sqrt(1.0 / 4.0), 0.5 * std::sqrt(9.0 / 4.0)})) < 1e-14);

  Rng rng(24);
  const SpdMatrix a = random_spd(rng, 3), x = random_spd(rng, 3);
  const HermitianMatrix fd = numdiff::gradient(
      [&](const HermitianMatrix& z) { return log_euclidean(a, SpdMatrix(z)).trace(); }, x,
      1e-3 * x.min_eigenvalue());
  CHECK(rel(d_tr_log_euclidean(a, x), fd.matrix()) <= 1e-6);
  CHECK(rel(d_tr_log_euclidean(a, x), d_tr_log_euclidean_quadrature(a, x).matrix()) <= 1e-7);
  CHECK(grad_phi4(a, a).matrix().norm() <= 1e-12);
}

TEST_CASE("quadrature identities") {
  CHECK(quad_check(QuadCheck::SqrtRepresentation, 4.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(quad_check(QuadCheck::SqrtRepresentation, 0.01) == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(quad_check(QuadCheck::FirstOrderNormalization) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(quad_check(QuadCheck::SecondOrderNormalization) == doctest::Approx(0.5).epsilon(1e-10));
  // Without the factor 4, the cubic moment is a quarter.
  CHECK(2.0 * resolvent_moment(3) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK_THROWS_AS(quad_check(QuadCheck::SqrtRepresentation, 0.0), DomainError);
  CHECK_THROWS_AS(resolvent_moment(1), DomainError);

  const IntegrationMeasure lebesgue{MeasureKind::Lebesgue, {}};
  CHECK(integrate_scalar(lebesgue, [](double l) { return 1.0 / ((1.0 + l) * (1.0 + l)); }) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature derivatives agree with divided differences") {
  Rng rng(25);
  const SpdMatrix x = random_spd(rng, 3, 100.0);
  const HermitianMatrix y = random_hermitian(rng, 3);
  CHECK(rel(frechet(SpectralFunction::sqrt(), x, y), frechet_sqrt_quadrature(x, y).matrix()) <=
        1e-7);
  CHECK(rel(frechet(SpectralFunction::log(), x, y), frechet_log_quadrature(x, y).matrix()) <= 1e-7);
}

}  // TEST_SUITE
