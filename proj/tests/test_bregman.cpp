#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "hellinger/bregman.hpp"
#include "hellinger/distances.hpp"
#include "hellinger/random.hpp"

using namespace hellinger;
using hellinger::testing::diag;
using hellinger::testing::dist;

TEST_SUITE("bregman") {

TEST_CASE("scalar divergences") {
  const MotherFunction ent = MotherFunction::entropy();
  CHECK(bregman_scalar(ent, 1.0, 1.0) == 0.0);
  CHECK(bregman_scalar(ent, 1.0, std::exp(1.0)) == doctest::Approx(std::exp(1.0) - 2.0));
  const MotherFunction sq = MotherFunction::square();
  CHECK(bregman_scalar(sq, 3.0, 0.5) == doctest::Approx(0.5 * 2.5 * 2.5));
  CHECK_THROWS_AS(bregman_scalar(ent, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(bregman_scalar(ent, 1.0, -1.0), DomainError);
}

TEST_CASE("mother function construction") {
  CHECK(MotherFunction::power(2.5).name().find("2.5") != std::string::npos);
  CHECK_THROWS_AS(MotherFunction::power(1.0), DomainError);
  // psi' = -x is decreasing: not strictly convex.
  CHECK_THROWS_AS(MotherFunction("bad", [](double x) { return -x * x / 2; },
                                 [](double x) { return -x; }, [](double y) { return -y; },
                                 OpenInterval{-INFINITY, 0.0}),
                  DomainError);
}

TEST_CASE("tracial divergence reduces to scalars on diagonal pairs") {
  for (const MotherFunction& m :
       {MotherFunction::entropy(), MotherFunction::square(), MotherFunction::power(1.7)}) {
    const double expect = bregman_scalar(m, 2.0, 5.0) + bregman_scalar(m, 0.3, 0.1);
    CHECK(bregman_tracial(m, diag({2, 0.3}), diag({5, 0.1})) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK(bregman_tracial(m, diag({2, 0.3}), diag({2, 0.3})) == doctest::Approx(0.0));
  }
}

TEST_CASE("relative entropy") {
  CHECK(relative_entropy(diag({0.5, 0.5}), diag({0.25, 0.75})) ==
        doctest::Approx(0.14384).epsilon(1e-4));
  Rng rng(30);
  const SpdMatrix a = random_spd(rng, 3), b = random_spd(rng, 3);
  // S(A|B) equals the entropy Bregman divergence up to tr(B - A).
  CHECK(relative_entropy(a, b) - a.trace() + b.trace() ==
        doctest::Approx(bregman_tracial(MotherFunction::entropy(), a, b)).epsilon(1e-12));
}

TEST_CASE("barycentres") {
  Rng rng(31);
  const std::vector<SpdMatrix> as{random_spd(rng, 3), random_spd(rng, 3), random_spd(rng, 3)};
  const WeightVector w({0.2, 0.5, 0.3});
  const SpdMatrix arith = arithmetic_mean(as, w);
  for (const MotherFunction& m :
       {MotherFunction::entropy(), MotherFunction::square(), MotherFunction::power(3.0)})
    CHECK(dist(right_barycentre(m, as, w).matrix(), arith.matrix()) <= 1e-12);

  CHECK(dist(left_barycentre(MotherFunction::entropy(), as, w).matrix(),
             log_euclidean(as, w).matrix()) <= 1e-10);
  CHECK(dist(left_barycentre(MotherFunction::square(), as, w).matrix(), arith.matrix()) <= 1e-12);

  const std::vector<SpdMatrix> same{as[0], as[0]};
  CHECK(dist(left_barycentre(MotherFunction::entropy(), same, WeightVector::uniform(2)).matrix(),
             as[0].matrix()) < 1e-12);
  CHECK(variance(MotherFunction::entropy(), same, WeightVector::uniform(2)) <= 1e-12);
}

TEST_CASE("entropy variance is tr A - tr L") {
  Rng rng(32);
  const std::vector<SpdMatrix> as{random_spd(rng, 4), random_spd(rng, 4)};
  const WeightVector w = WeightVector::uniform(2);
  const double expect = arithmetic_mean(as, w).trace() - log_euclidean(as, w).trace();
  CHECK(std::abs(variance(MotherFunction::entropy(), as, w) - expect) <= 1e-10);
}

TEST_CASE("phi4 as a minimum of entropy divergences") {
  Rng rng(33);
  const SpdMatrix a = random_spd(rng, 3), b = random_spd(rng, 3);
  CHECK(std::abs(phi4_via_min(a, b) - divergence(DistanceKind::D4, a, b)) <= 1e-9);
  CHECK(phi4_via_min(a, a) <= 1e-12);
  const double scalar = std::pow(1.0 - 3.0, 2) + std::pow(2.0 - 0.5, 2);
  CHECK(phi4_via_min(diag({1, 4}), diag({9, 0.25})) == doctest::Approx(scalar).epsilon(1e-12));
}

}  // TEST_SUITE
