#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "quatmt/hardy.hpp"

using namespace quatmt;
using testutil::pi;
using testutil::Rng;

TEST_CASE("inner_product_quadrature") {
  const UnitImaginary I = UnitImaginary::i();
  const auto identity_fn = [](const Quaternion& q) { return q; };
  const auto one_fn = [](const Quaternion&) { return Quaternion(1.0); };

  const SliceBoundaryGrid boundary_q = SliceBoundaryGrid::sample(identity_fn, I, 64);
  const SliceBoundaryGrid boundary_1 = SliceBoundaryGrid::sample(one_fn, I, 64);

  CHECK(distance(inner_product_quadrature(boundary_q, boundary_q), Quaternion(1.0)) < 1e-12);
  CHECK(inner_product_quadrature(boundary_q, boundary_1).norm() < 1e-12);

  SUBCASE("agrees with the coefficient inner product for polynomials") {
    Rng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
      const UnitImaginary dir = testutil::random_direction(rng);
      const RegularSeries f = testutil::random_series(rng, 8);
      const RegularSeries g = testutil::random_series(rng, 8);
      const Quaternion quad =
          inner_product_quadrature(SliceBoundaryGrid::sample_series(f, dir, 32),
                                   SliceBoundaryGrid::sample_series(g, dir, 32));
      CHECK(distance(quad, h2_inner_coeff(f, g)) < 1e-10);
    }
  }

  SUBCASE("grid mismatch is rejected") {
    const SliceBoundaryGrid other_m = SliceBoundaryGrid::sample(one_fn, I, 32);
    const SliceBoundaryGrid other_dir = SliceBoundaryGrid::sample(one_fn, UnitImaginary::j(), 64);
    CHECK_THROWS_AS((void)inner_product_quadrature(boundary_q, other_m), std::domain_error);
    CHECK_THROWS_AS((void)inner_product_quadrature(boundary_q, other_dir), std::domain_error);
  }
}

TEST_CASE("poisson_eval") {
  const UnitImaginary I = UnitImaginary::j();
  const Quaternion c{0.3, -0.7, 0.2, 1.1};
  const SliceBoundaryGrid constant =
      SliceBoundaryGrid::sample([&c](const Quaternion&) { return c; }, I, 128);
  CHECK(distance(poisson_eval(constant, 0.4, 1.3), c) < 1e-12);

  const SliceBoundaryGrid identity =
      SliceBoundaryGrid::sample([](const Quaternion& q) { return q; }, I, 128);
  CHECK(distance(poisson_eval(identity, 0.5, 0.0), Quaternion(0.5)) < 1e-10);

  // r = 0 collapses to the boundary mean, the 0th Fourier coefficient
  CHECK(distance(poisson_eval(identity, 0.0, 0.77), Quaternion()) < 1e-14);

  CHECK_THROWS_AS((void)poisson_eval(identity, 1.0, 0.0), std::domain_error);
}

TEST_CASE("cauchy_slice_eval") {
  const UnitImaginary I = UnitImaginary::i();
  const Quaternion c{0.1, 0.2, -0.4, 0.9};
  const SliceBoundaryGrid constant =
      SliceBoundaryGrid::sample([&c](const Quaternion&) { return c; }, I, 256);
  CHECK(distance(cauchy_slice_eval(constant, Quaternion(0.2)), c) < 1e-12);

  const SliceBoundaryGrid squares =
      SliceBoundaryGrid::sample([](const Quaternion& q) { return q * q; }, I, 256);
  const Quaternion z = Quaternion(0.3) + 0.4 * Quaternion::i();
  CHECK(distance(cauchy_slice_eval(squares, z), z * z) < 1e-10);

  // z = 0 picks out the mean of the samples
  CHECK(cauchy_slice_eval(squares, Quaternion()).norm() < 1e-13);

  CHECK_THROWS_AS((void)cauchy_slice_eval(squares, Quaternion(1.0)), std::domain_error);
  CHECK_THROWS_AS((void)cauchy_slice_eval(squares, 0.5 * Quaternion::j()), std::domain_error);
}

TEST_CASE("cauchy_kernel") {
  SUBCASE("real arguments reduce to 1/(s-q)") {
    CHECK(nearly_equal(cauchy_kernel(Quaternion(2.0), Quaternion(0.5)),
                       Quaternion(1.0 / 1.5), 1e-14));
  }

  SUBCASE("slice arguments reduce to the complex kernel") {
    Rng rng(107);
    for (int trial = 0; trial < 50; ++trial) {
      const UnitImaginary I = testutil::random_direction(rng);
      const Quaternion s = exp_slice(testutil::uniform(rng, 0.0, 2.0 * pi), I);
      const Quaternion q = testutil::random_slice_point(rng, I, 0.8);
      const std::complex<double> expected =
          1.0 / (slice_components(s, I) - slice_components(q, I));
      CHECK(distance(cauchy_kernel(s, q), embed_in_slice(expected, I)) < 1e-13);
    }
  }

  SUBCASE("is the star reciprocal of s - q") {
    Rng rng(109);
    const Quaternion s = testutil::random_boundary_point(rng);
    // as series in q: s - q = [s, -1]; its star reciprocal via the real
    // symmetrization route
    const RegularSeries linear{s, -1.0};
    const RegularSeries kernel_series = regular_reciprocal(linear, 64);
    const RegularSeries product = star_product(linear, kernel_series);
    CHECK(distance(product.coeff(0), Quaternion(1.0)) < 1e-12);
    for (int n = 1; n <= 64; ++n) CHECK(product.coeff(n).norm() < 1e-12);
    // pointwise values of that series agree with the closed form well inside
    // the disc of convergence
    const Quaternion q = testutil::random_ball_point(rng, 0.4);
    CHECK(distance(eval(kernel_series, q), cauchy_kernel(s, q)) < 1e-9);
  }

  SUBCASE("singular sphere is rejected") {
    const Quaternion s = Quaternion{0.0, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)cauchy_kernel(s, Quaternion::j()), std::domain_error);
  }
}

TEST_CASE("regular_cauchy_eval") {
  Rng rng(113);
  const UnitImaginary I = UnitImaginary::i();

  SUBCASE("reconstructs q^2 far from the sampled slice") {
    const SliceBoundaryGrid squares =
        SliceBoundaryGrid::sample([](const Quaternion& q) { return q * q; }, I, 512);
    const Quaternion q{0.0, 0.0, 0.3, 0.2};
    CHECK(distance(regular_cauchy_eval(squares, q), q * q) < 1e-9);
  }

  SUBCASE("agrees with the slice Cauchy integral on the slice") {
    const RegularSeries f = testutil::random_series(rng, 16);
    const SliceBoundaryGrid grid = SliceBoundaryGrid::sample_series(f, I, 1024);
    for (int trial = 0; trial < 10; ++trial) {
      const Quaternion z = testutil::random_slice_point(rng, I, 0.8);
      CHECK(distance(regular_cauchy_eval(grid, z), cauchy_slice_eval(grid, z)) < 1e-10);
    }
  }

  SUBCASE("constants") {
    const Quaternion c{0.4, 1.0, -2.0, 0.25};
    const SliceBoundaryGrid constant =
        SliceBoundaryGrid::sample([&c](const Quaternion&) { return c; }, I, 128);
    CHECK(distance(regular_cauchy_eval(constant, Quaternion{0.1, 0.2, 0.3, 0.1}), c) < 1e-11);
  }

  SUBCASE("points too close to the boundary are rejected") {
    const SliceBoundaryGrid constant =
        SliceBoundaryGrid::sample([](const Quaternion&) { return Quaternion(1.0); }, I, 64);
    CHECK_THROWS_AS((void)regular_cauchy_eval(constant, Quaternion(1.0)), std::domain_error);
  }
}

TEST_CASE("extend_from_slice") {
  const UnitImaginary I = UnitImaginary::i();

  SUBCASE("collapses on the slice") {
    Rng rng(127);
    const RegularSeries f = testutil::random_series(rng, 8);
    const auto F = [&f](const Quaternion& z) { return eval(f, z); };
    const Quaternion z = testutil::random_slice_point(rng, I, 0.9);
    CHECK(nearly_equal(extend_from_slice(F, I, z), eval(f, z), 1e-13));
  }

  SUBCASE("recovers q^2 off the slice") {
    const auto F = [](const Quaternion& z) { return z * z; };
    const Quaternion q = 0.2 * Quaternion::j();
    CHECK(nearly_equal(extend_from_slice(F, I, q), Quaternion(-0.04), 1e-14));
  }

  SUBCASE("real even slice data extends direction-independently") {
    const auto F = [](const Quaternion& z) { return Quaternion(z.norm_sq()); };
    const Quaternion qa{0.3, 0.0, 0.4, 0.0};
    const Quaternion qb{0.3, 0.0, 0.0, 0.4};
    const Quaternion va = extend_from_slice(F, I, qa);
    CHECK(distance(va, extend_from_slice(F, I, qb)) < 1e-15);
    CHECK(nearly_equal(va, Quaternion(0.25), 1e-14));
  }
}

TEST_CASE("hardy invariants") {
  Rng rng(131);

  SUBCASE("Poisson and Cauchy reconstruct interior values") {
    for (int trial = 0; trial < 5; ++trial) {
      const UnitImaginary I = testutil::random_direction(rng);
      const RegularSeries f = testutil::random_series(rng, 32);
      const SliceBoundaryGrid grid = SliceBoundaryGrid::sample_series(f, I, 1024);
      const double r = testutil::uniform(rng, 0.0, 0.9);
      const double theta = testutil::uniform(rng, 0.0, 2.0 * pi);
      const Quaternion z = r * exp_slice(theta, I);
      const Quaternion reference = eval(f, z);
      CHECK(distance(poisson_eval(grid, r, theta), reference) < 1e-9);
      CHECK(distance(cauchy_slice_eval(grid, z), reference) < 1e-9);
    }
  }

  SUBCASE("single-slice data reconstructs the whole ball") {
    const RegularSeries f = testutil::random_series(rng, 32);
    const SliceBoundaryGrid grid =
        SliceBoundaryGrid::sample_series(f, UnitImaginary::i(), 2048);
    for (int trial = 0; trial < 50; ++trial) {
      const Quaternion q = testutil::random_ball_point(rng, 0.8);
      CHECK(distance(regular_cauchy_eval(grid, q), eval(f, q)) < 1e-8);
    }
  }

  SUBCASE("extension of a restriction is the identity") {
    for (int trial = 0; trial < 50; ++trial) {
      const UnitImaginary I = testutil::random_direction(rng);
      const RegularSeries f = testutil::random_series(rng, 16);
      const Quaternion q = testutil::random_ball_point(rng, 0.95);
      const Quaternion extended = extend_from_slice(
          [&f](const Quaternion& z) { return eval(f, z); }, I, q);
      CHECK(nearly_equal(extended, eval(f, q), 1e-11));
    }
  }

  SUBCASE("interior sampling radius approximates boundary data") {
    const UnitImaginary I = testutil::random_direction(rng);
    const RegularSeries f = testutil::random_series(rng, 8);
    const SliceBoundaryGrid inner = SliceBoundaryGrid::sample_series(f, I, 64, 1.0 - 1e-6);
    const SliceBoundaryGrid edge = SliceBoundaryGrid::sample_series(f, I, 64);
    for (int m = 0; m < 64; ++m) {
      CHECK(distance(inner.values()[static_cast<std::size_t>(m)],
                     edge.values()[static_cast<std::size_t>(m)]) < 1e-4);
    }
    CHECK_THROWS_AS((void)SliceBoundaryGrid::sample_series(f, I, 64, 1.5),
                    std::invalid_argument);
  }

  SUBCASE("doubling the node count does not move converged results") {
    const RegularSeries f = testutil::random_series(rng, 24);
    const UnitImaginary I = testutil::random_direction(rng);
    const SliceBoundaryGrid grid = SliceBoundaryGrid::sample_series(f, I, 1024);
    const SliceBoundaryGrid dense = SliceBoundaryGrid::sample_series(f, I, 2048);
    const Quaternion z = 0.5 * exp_slice(0.9, I);
    CHECK(distance(cauchy_slice_eval(grid, z), cauchy_slice_eval(dense, z)) < 1e-11);
    CHECK(distance(poisson_eval(grid, 0.5, 0.9), poisson_eval(dense, 0.5, 0.9)) < 1e-11);
  }
}
