#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hellinger/distances.hpp"
#include "hellinger/means.hpp"
#include "hellinger/random.hpp"

using namespace hellinger;
using hellinger::testing::diag;
using hellinger::testing::dist;
using hellinger::testing::spd2;

TEST_SUITE("distances") {

TEST_CASE("hellinger on probability vectors") {
  const ProbabilityVector p({0.5, 0.5});
  CHECK(hellinger::hellinger(p, p) == 0.0);
  CHECK(hellinger::hellinger(ProbabilityVector({1, 0}), ProbabilityVector({0, 1})) == doctest::Approx(1.0));
  CHECK(hellinger::hellinger(p, ProbabilityVector({1, 0})) == doctest::Approx(0.54120).epsilon(1e-5));
  CHECK(hellinger::hellinger(p, ProbabilityVector({1, 0})) ==
        doctest::Approx(std::sqrt(1.0 - std::sqrt(0.5))).epsilon(1e-14));

  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(ProbabilityVector({1.5, -0.5}), DomainError);
  CHECK_THROWS_AS(ProbabilityVector({}), DimensionError);
  CHECK_THROWS_AS(hellinger::hellinger(p, ProbabilityVector({1, 0, 0})), DimensionError);
}

TEST_CASE("distance kinds parse case-insensitively") {
  CHECK(parse_distance_kind("d3") == DistanceKind::D3);
  CHECK(parse_distance_kind("D4") == DistanceKind::D4);
  CHECK(to_string(DistanceKind::D2) == "d2");
  CHECK_THROWS_AS(parse_distance_kind("d5"), DomainError);
}

TEST_CASE("distance from a matrix to itself is zero") {
  Rng rng(12);
  const SpdMatrix a = random_spd(rng, 4, 100.0);
  for (DistanceKind k : {DistanceKind::D1, DistanceKind::D2, DistanceKind::D3, DistanceKind::D4})
    CHECK(distance(k, a, a) <= 1e-6);
  CHECK(divergence(DistanceKind::D3, a, a) <= 1e-12 * a.trace());
}

TEST_CASE("d3 and d4 on the triangle counterexample matrices") {
  CHECK(distance(DistanceKind::D3, spd2(2, 5, 17), spd2(13, 8, 5)) ==
        doctest::Approx(5.0347).epsilon(1e-4));
  CHECK(distance(DistanceKind::D4, spd2(4, -7, 13), spd2(8, -2, 1)) ==
        doctest::Approx(3.3349).epsilon(1e-4));
}

TEST_CASE("divergence reduces to scalars for commuting input") {
  CHECK(divergence(DistanceKind::D3, diag({1, 4}), diag({9, 16})) == doctest::Approx(8.0));
  CHECK(divergence(DistanceKind::D4, diag({1, 4}), diag({9, 16})) == doctest::Approx(8.0));
}

TEST_CASE("trace chain") {
  Rng rng(13);
  const SpdMatrix a = random_spd(rng, 3);
  const TraceChain same = trace_chain(a, a);
  for (double v : {same.geometric, same.log_euclidean, same.sqrt_product, same.product_sqrt})
    CHECK(v == doctest::Approx(a.trace()).epsilon(1e-12));

  const TraceChain c = trace_chain(diag({1, 4}), diag({9, 16}));
  for (double v : {c.geometric, c.log_euclidean, c.sqrt_product, c.product_sqrt})
    CHECK(v == doctest::Approx(11.0).epsilon(1e-13));

  const SpdMatrix x = random_spd(rng, 4, 100.0), y = random_spd(rng, 4, 100.0);
  const TraceChain r = trace_chain(x, y);
  CHECK(r.geometric < r.log_euclidean);
  CHECK(r.log_euclidean < r.sqrt_product);
  CHECK(r.sqrt_product < r.product_sqrt);
  CHECK(divergence(DistanceKind::D4, x, y) <= divergence(DistanceKind::D3, x, y));
}

TEST_CASE("d2 as a unitary minimum") {
  Rng rng(14);
  const SpdMatrix a = random_spd(rng, 3);
  const UnitaryMinimum self = d2_unitary(a, a);
  CHECK(self.value <= 1e-7);
  CHECK(dist(self.unitary, Matrix::Identity(3, 3)) < 1e-10);

  const SpdMatrix p = diag({1, 4}), q = diag({9, 1});
  const UnitaryMinimum dm = d2_unitary(p, q);
  CHECK(dist(dm.unitary, Matrix::Identity(2, 2)) < 1e-12);
  CHECK(dm.value == doctest::Approx(std::sqrt(4.0 + 1.0)));

  const SpdMatrix b = random_spd(rng, 3);
  const UnitaryMinimum m = d2_unitary(a, b);
  CHECK(std::abs(m.value - distance(DistanceKind::D2, a, b)) <= 1e-9);
  CHECK(dist(m.unitary.adjoint() * m.unitary, Matrix::Identity(3, 3)) < 1e-12);
  const Matrix sa = sqrtm(a).matrix(), sb = sqrtm(b).matrix();
  for (int k = 0; k < 50; ++k)
    CHECK(m.value <= (sa - sb * random_unitary(rng, 3)).norm() + 1e-12);
}

}  // TEST_SUITE
