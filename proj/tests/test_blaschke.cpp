#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "quatmt/blaschke.hpp"

using namespace quatmt;
using testutil::Rng;
using testutil::series_close;

TEST_CASE("classical_blaschke") {
  Rng rng(47);
  const Quaternion q = testutil::random_ball_point(rng, 1.0);
  CHECK(nearly_equal(classical_blaschke(BlaschkeParam(Quaternion()), q), q, 1e-15));

  const Quaternion a = testutil::random_ball_point(rng, 0.9);
  CHECK(classical_blaschke(BlaschkeParam(a), a).norm() < 1e-15);

  CHECK(nearly_equal(classical_blaschke(BlaschkeParam(Quaternion(0.5)), Quaternion(1.0)),
                     Quaternion(1.0), 1e-15));

  CHECK_THROWS_AS(BlaschkeParam(Quaternion(1.0)), std::domain_error);
}

TEST_CASE("blaschke_conjugation") {
  CHECK(nearly_equal(blaschke_conjugation(BlaschkeParam(Quaternion(0.3)), Quaternion(0.7)),
                     Quaternion(0.7), 1e-15));

  Rng rng(53);
  const Quaternion q = testutil::random_ball_point(rng, 1.0);
  CHECK(nearly_equal(blaschke_conjugation(BlaschkeParam(Quaternion()), q), q, 1e-15));

  // a = i/2, q = j, expanded by hand: (1 + k/2)^{-1} j (1 + k/2) = 0.8 i + 0.6 j
  CHECK(nearly_equal(blaschke_conjugation(BlaschkeParam(0.5 * Quaternion::i()), Quaternion::j()),
                     Quaternion{0.0, 0.8, 0.6, 0.0}, 1e-15));

  // conjugation preserves the norm
  for (int trial = 0; trial < 100; ++trial) {
    const BlaschkeParam a(testutil::random_ball_point(rng, 0.95));
    const Quaternion p = testutil::random_ball_point(rng, 1.0);
    CHECK(nearly_equal(blaschke_conjugation(a, p).norm(), p.norm(), 1e-12));
  }
}

TEST_CASE("regular_blaschke_series") {
  CHECK(series_close(regular_blaschke_series(BlaschkeParam(Quaternion()), 8),
                     RegularSeries{0.0, 1.0}, 1e-16));

  const RegularSeries half = regular_blaschke_series(BlaschkeParam(Quaternion(0.5)), 8);
  CHECK(half.coeff(0).w == doctest::Approx(-0.5));
  CHECK(half.coeff(1).w == doctest::Approx(0.75));
  CHECK(half.coeff(2).w == doctest::Approx(0.375));
  CHECK(half.coeff(3).w == doctest::Approx(0.1875));

  Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const Quaternion a = testutil::random_ball_point(rng, 0.9);
    CHECK(distance(regular_blaschke_series(BlaschkeParam(a), 16).coeff(0), -a) < 1e-14);
  }
}

TEST_CASE("regular_blaschke_eval") {
  Rng rng(61);
  const Quaternion a = testutil::random_ball_point(rng, 0.8);
  CHECK(regular_blaschke_eval(BlaschkeParam(a), a).norm() < 1e-14);

  const Quaternion q = testutil::random_ball_point(rng, 1.0);
  CHECK(nearly_equal(regular_blaschke_eval(BlaschkeParam(Quaternion()), q), q, 1e-15));

  const BlaschkeParam p(Quaternion{0.3, 0.4, 0.0, 0.0});
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion boundary = testutil::random_boundary_point(rng);
    CHECK(std::abs(regular_blaschke_eval(p, boundary).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("blaschke invariants") {
  Rng rng(67);

  SUBCASE("factors commute") {
    for (int trial = 0; trial < 20; ++trial) {
      const Quaternion a = testutil::random_ball_point(rng, 0.9);
      const RegularSeries reciprocal =
          regular_reciprocal(RegularSeries{1.0, -a.conj()}, 128);
      const RegularSeries linear{-a, 1.0};
      CHECK(series_close(star_product(reciprocal, linear),
                         star_product(linear, reciprocal), 1e-13));
    }
  }

  SUBCASE("series agrees with the closed form inside the ball") {
    for (int trial = 0; trial < 20; ++trial) {
      const BlaschkeParam a(testutil::random_ball_point(rng, 0.8));
      const RegularSeries series = regular_blaschke_series(a, 128);
      const Quaternion q = testutil::random_ball_point(rng, 0.9);
      CHECK(distance(eval(series, q), regular_blaschke_eval(a, q)) < 1e-10);
    }
  }

  SUBCASE("modulus map") {
    const BlaschkeParam a(testutil::random_ball_point(rng, 0.9));
    for (int trial = 0; trial < 100; ++trial) {
      CHECK(regular_blaschke_eval(a, testutil::random_ball_point(rng, 0.999)).norm() < 1.0);
      CHECK(std::abs(regular_blaschke_eval(a, testutil::random_boundary_point(rng)).norm() - 1.0) <
            1e-12);
    }
  }

  SUBCASE("slice preservation and agreement with the classical map") {
    for (int trial = 0; trial < 50; ++trial) {
      const UnitImaginary I = testutil::random_direction(rng);
      const BlaschkeParam a(testutil::random_slice_point(rng, I, 0.9));
      const Quaternion z = testutil::random_slice_point(rng, I, 1.0);
      const Quaternion value = regular_blaschke_eval(a, z);
      CHECK(slice_residual(value, I) < 1e-12);
      CHECK(nearly_equal(value, classical_blaschke(a, z), 1e-12));
    }
  }
}
