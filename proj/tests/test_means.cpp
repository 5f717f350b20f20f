#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "hellinger/means.hpp"
#include "hellinger/random.hpp"

using namespace hellinger;
using hellinger::testing::diag;
using hellinger::testing::dist;

TEST_SUITE("means") {

TEST_CASE("WeightVector normalizes and validates") {
  const WeightVector w({1.0, 3.0});
  CHECK(w[0] == doctest::Approx(0.25));
  CHECK(w[1] == doctest::Approx(0.75));
  CHECK_THROWS_AS(WeightVector({}), DimensionError);
  CHECK_THROWS_AS(WeightVector({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(WeightVector({1.0, -1.0}), DomainError);
}

TEST_CASE("arithmetic_mean") {
  const std::vector<SpdMatrix> pair{diag({1, 1}), diag({3, 3})};
  CHECK(dist(arithmetic_mean(pair, WeightVector::uniform(2)).matrix(), diag({2, 2}).matrix()) <
        1e-15);

  Rng rng(1);
  const std::vector<SpdMatrix> three{random_spd(rng, 3), random_spd(rng, 3), random_spd(rng, 3)};
  const Matrix expect = 0.2 * three[0].matrix() + 0.3 * three[1].matrix() + 0.5 * three[2].matrix();
  CHECK(dist(arithmetic_mean(three, WeightVector({0.2, 0.3, 0.5})).matrix(), expect) < 1e-14);

  const std::vector<SpdMatrix> mixed{diag({1, 1}), diag({1, 1, 1})};
  CHECK_THROWS_AS(arithmetic_mean(mixed, WeightVector::uniform(2)), DimensionError);
  CHECK_THROWS_AS(arithmetic_mean(pair, WeightVector::uniform(3)), DimensionError);
}

TEST_CASE("geometric_mean_t") {
  Rng rng(4);
  const SpdMatrix a = random_spd(rng, 3), b = random_spd(rng, 3);
  CHECK(dist(geometric_mean(a, a).matrix(), a.matrix()) < 1e-13);
  CHECK(dist(geometric_mean_t(a, b, 0.0).matrix(), a.matrix()) < 1e-13);
  CHECK(dist(geometric_mean_t(a, b, 1.0).matrix(), b.matrix()) < 1e-12);
  CHECK(dist(geometric_mean(diag({1, 4}), diag({9, 16})).matrix(), diag({3, 8}).matrix()) < 1e-13);
  CHECK(dist(geometric_mean_t(diag({1, 4}), diag({8, 4}), 1.0 / 3.0).matrix(),
             diag({2, 4}).matrix()) < 1e-13);

  const Matrix k = random_invertible(rng, 3);
  const SpdMatrix lhs = congruence(k, geometric_mean(a, b));
  const SpdMatrix rhs = geometric_mean(congruence(k, a), congruence(k, b));
  CHECK(dist(lhs.matrix(), rhs.matrix()) <= 1e-9 * lhs.matrix().norm());

  CHECK(dist(geometric_mean(a, b).matrix(), geometric_mean(b, a).matrix()) < 1e-12);
  CHECK_THROWS_AS(geometric_mean_t(a, b, -0.1), DomainError);
  CHECK_THROWS_AS(geometric_mean_t(a, b, 1.5), DomainError);
}

TEST_CASE("log_euclidean") {
  const double e2 = std::exp(2.0), e = std::exp(1.0);
  CHECK(dist(log_euclidean(diag({1, e2}), diag({e2, 1})).matrix(), diag({e, e}).matrix()) < 1e-13);

  Rng rng(6);
  const SpdMatrix a = random_spd(rng, 4), b = random_spd(rng, 4);
  CHECK(dist(log_euclidean(a, a).matrix(), a.matrix()) < 1e-12);

  const std::vector<SpdMatrix> pair{a, b};
  CHECK(dist(log_euclidean(pair, WeightVector::uniform(2)).matrix(),
             log_euclidean(a, b).matrix()) <= 1e-12);

  const std::vector<SpdMatrix> same{a, a, a};
  CHECK(dist(log_euclidean(same, WeightVector({0.1, 0.6, 0.3})).matrix(), a.matrix()) < 1e-12);

  const std::vector<SpdMatrix> diagonal{diag({1, 8}), diag({4, 1}), diag({2, 2})};
  const WeightVector w({0.5, 0.25, 0.25});
  const double x0 = std::pow(1.0, 0.5) * std::pow(4.0, 0.25) * std::pow(2.0, 0.25);
  const double x1 = std::pow(8.0, 0.5) * std::pow(1.0, 0.25) * std::pow(2.0, 0.25);
  CHECK(dist(log_euclidean(diagonal, w).matrix(), diag({x0, x1}).matrix()) < 1e-13);
}

TEST_CASE("fidelity") {
  Rng rng(8);
  const SpdMatrix a = random_spd(rng, 3), b = random_spd(rng, 3);
  CHECK(fidelity(a, a) == doctest::Approx(a.trace()).epsilon(1e-13));
  CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) <= 1e-10);

  // Nearly pure states: F(uu*, vv*) = |u*v|.
  Eigen::Vector2cd u(1.0, 0.0), v(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  const Matrix shift = 1e-8 * Matrix::Identity(2, 2);
  const SpdMatrix pu(HermitianMatrix(Matrix(u * u.adjoint() + shift)));
  const SpdMatrix pv(HermitianMatrix(Matrix(v * v.adjoint() + shift)));
  CHECK(fidelity(pu, pv) == doctest::Approx(0.70711).epsilon(1e-5));
}

TEST_CASE("q_half") {
  const std::vector<SpdMatrix> pair{diag({1, 9}), diag({9, 1})};
  CHECK(dist(q_half(pair, WeightVector::uniform(2)).matrix(), diag({4, 4}).matrix()) < 1e-13);

  Rng rng(10);
  const SpdMatrix a = random_spd(rng, 3);
  const std::vector<SpdMatrix> same{a, a};
  CHECK(dist(q_half(same, WeightVector::uniform(2)).matrix(), a.matrix()) < 1e-12);
}

}  // TEST_SUITE
