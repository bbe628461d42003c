#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "quatmt/series.hpp"

using namespace quatmt;
using testutil::Rng;
using testutil::series_close;

namespace {

// Reference convolution, written independently of star_product.
RegularSeries naive_convolution(const RegularSeries& f, const RegularSeries& g,
                                int degree) {
  std::vector<Quaternion> out(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) {
    Quaternion acc;
    for (int k = 0; k <= n; ++k) {
      acc += f.coeff(k) * g.coeff(n - k);
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
  return RegularSeries(std::move(out));
}

RegularSeries geometric_series(const Quaternion& ratio, int degree) {
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs[0] = Quaternion(1.0);
  for (int n = 1; n <= degree; ++n) {
    coeffs[static_cast<std::size_t>(n)] = coeffs[static_cast<std::size_t>(n - 1)] * ratio;
  }
  return RegularSeries(std::move(coeffs));
}

}  // namespace

TEST_CASE("eval respects left powers and right coefficients") {
  CHECK(distance(eval(RegularSeries{0.0, 1.0}, Quaternion::j()), Quaternion::j()) == 0.0);

  const Quaternion a0{0.25, -1.0, 2.0, 0.5};
  CHECK(distance(eval(RegularSeries{a0}, Quaternion{3.0, 1.0, -2.0, 0.0}), a0) == 0.0);

  // f = 1 + q i at q = j: 1 + j i = 1 - k
  CHECK(distance(eval(RegularSeries{1.0, Quaternion::i()}, Quaternion::j()),
                 Quaternion{1.0, 0.0, 0.0, -1.0}) == 0.0);
}

TEST_CASE("star_product") {
  Rng rng(31);

  SUBCASE("matches the reference convolution") {
    for (int trial = 0; trial < 10; ++trial) {
      const RegularSeries f = testutil::random_series(rng, 12);
      const RegularSeries g = testutil::random_series(rng, 9);
      CHECK(series_close(star_product(f, g), naive_convolution(f, g, 21), 1e-15));
    }
  }

  SUBCASE("telescoping against the geometric series") {
    const Quaternion a{0.2, 0.3, -0.4, 0.1};
    const RegularSeries product =
        star_product(RegularSeries{1.0, -a.conj()}, geometric_series(a.conj(), 64));
    CHECK(distance(product.coeff(0), Quaternion(1.0)) == 0.0);
    for (int n = 1; n <= 64; ++n) {
      CHECK(product.coeff(n).norm() < 1e-15);
    }
  }

  SUBCASE("unit and monomials") {
    const RegularSeries f = testutil::random_series(rng, 7);
    CHECK(series_close(star_product(f, RegularSeries::constant(1.0)), f, 1e-16));
    CHECK(series_close(star_product(RegularSeries{0.0, 1.0}, RegularSeries{0.0, 1.0}),
                       RegularSeries{0.0, 0.0, 1.0}, 1e-16));
  }

  SUBCASE("degree cap never cuts below an input's degree") {
    const int saved = max_truncation_degree();
    set_max_truncation_degree(16);
    const RegularSeries big = testutil::random_series(rng, 40);
    const RegularSeries small = testutil::random_series(rng, 3);
    CHECK(star_product(big, small).degree() == 40);
    CHECK(star_product(small, small).degree() == 6);
    CHECK(star_product(testutil::random_series(rng, 10), testutil::random_series(rng, 10)).degree() == 16);
    set_max_truncation_degree(saved);
  }
}

TEST_CASE("regular_conjugate") {
  CHECK(series_close(regular_conjugate(RegularSeries{1.0, Quaternion::i()}),
                     RegularSeries{1.0, -Quaternion::i()}, 1e-16));
  const RegularSeries real_series{0.5, -2.0, 3.0};
  CHECK(series_close(regular_conjugate(real_series), real_series, 1e-16));
  CHECK(series_close(regular_conjugate(RegularSeries{Quaternion::j(), Quaternion{1, 0, 0, 1}}),
                     RegularSeries{-Quaternion::j(), Quaternion{1, 0, 0, -1}}, 1e-16));
}

TEST_CASE("symmetrization") {
  const Quaternion a{0.1, 0.4, -0.2, 0.3};
  const RegularSeries fs = symmetrization(RegularSeries{1.0, -a.conj()});
  CHECK(series_close(fs, RegularSeries{1.0, Quaternion(-2.0 * a.w), Quaternion(a.norm_sq())},
                     1e-15));

  const Quaternion c{0.3, -1.0, 0.2, 2.0};
  CHECK(series_close(symmetrization(RegularSeries{c}),
                     RegularSeries{Quaternion(c.norm_sq())}, 1e-14));

  CHECK(series_close(symmetrization(RegularSeries{0.0, 1.0}),
                     RegularSeries{0.0, 0.0, 1.0}, 1e-16));

  // output coefficients are coerced exactly real
  Rng rng(37);
  const RegularSeries random_sym = symmetrization(testutil::random_series(rng, 20));
  for (const Quaternion& coeff : random_sym.coeffs()) {
    CHECK(coeff.imag_norm() == 0.0);
  }
}

TEST_CASE("invert_real_series") {
  SUBCASE("geometric") {
    const double r = 0.37;
    const RegularSeries t = invert_real_series(RegularSeries{1.0, -r}, 32);
    for (int n = 0; n <= 32; ++n) {
      CHECK(t.coeff(n).w == doctest::Approx(std::pow(r, n)).epsilon(1e-13));
    }
  }

  SUBCASE("constant") {
    CHECK(series_close(invert_real_series(RegularSeries{2.0}, 0), RegularSeries{0.5}, 1e-16));
  }

  SUBCASE("Blaschke denominator pattern for a = 0.5") {
    const RegularSeries s{1.0, -1.0, 0.25};
    const RegularSeries t = invert_real_series(s, 8);
    CHECK(t.coeff(0).w == doctest::Approx(1.0));
    CHECK(t.coeff(1).w == doctest::Approx(1.0));
    CHECK(t.coeff(2).w == doctest::Approx(0.75));
    CHECK(t.coeff(3).w == doctest::Approx(0.5));
    // independent oracle: convolving back must give 1
    const RegularSeries product = star_product(s, t);
    CHECK(distance(product.coeff(0), Quaternion(1.0)) < 1e-15);
    for (int n = 1; n <= 8; ++n) CHECK(product.coeff(n).norm() < 1e-14);
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS((void)invert_real_series(RegularSeries{0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS((void)invert_real_series(RegularSeries{Quaternion::i()}),
                    std::invalid_argument);
  }
}

TEST_CASE("regular_reciprocal") {
  SUBCASE("geometric closed form for a linear factor") {
    const Quaternion a = 0.5 * Quaternion::i();
    const RegularSeries reciprocal = regular_reciprocal(RegularSeries{1.0, -a.conj()}, 48);
    CHECK(series_close(reciprocal, geometric_series(a.conj(), 48), 1e-13));
  }

  SUBCASE("constants invert pointwise") {
    const Quaternion c{0.5, -1.0, 0.25, 2.0};
    CHECK(series_close(regular_reciprocal(RegularSeries{c}, 4),
                       RegularSeries{inverse(c), 0.0, 0.0, 0.0, 0.0}, 1e-14));
  }

  SUBCASE("real geometric in q^2") {
    const RegularSeries reciprocal = regular_reciprocal(RegularSeries{1.0, 0.0, -0.25}, 8);
    CHECK(reciprocal.coeff(0).w == doctest::Approx(1.0));
    CHECK(reciprocal.coeff(1).norm() < 1e-15);
    CHECK(reciprocal.coeff(2).w == doctest::Approx(0.25));
    CHECK(reciprocal.coeff(3).norm() < 1e-15);
    CHECK(reciprocal.coeff(4).w == doctest::Approx(0.0625));
  }

  SUBCASE("zero series is rejected") {
    CHECK_THROWS_AS((void)regular_reciprocal(RegularSeries::zero(4)), std::domain_error);
  }
}

TEST_CASE("h2 norm and inner product") {
  CHECK(h2_norm(RegularSeries{0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(h2_norm(RegularSeries{1.0, Quaternion::i()}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(h2_norm(geometric_series(Quaternion(0.5), 256)) ==
        doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));

  CHECK(distance(h2_inner_coeff(RegularSeries{0.0, 1.0}, RegularSeries{0.0, 1.0}),
                 Quaternion(1.0)) == 0.0);
  CHECK(distance(h2_inner_coeff(RegularSeries{0.0, 1.0}, RegularSeries{1.0}),
                 Quaternion()) == 0.0);
  // <[i],[j]> = conj(j) i = -ji = k
  CHECK(distance(h2_inner_coeff(RegularSeries{Quaternion::i()}, RegularSeries{Quaternion::j()}),
                 Quaternion::k()) == 0.0);
}

TEST_CASE("restrict_to_slice") {
  const UnitImaginary I = UnitImaginary::i();
  const UnitImaginary J = UnitImaginary::j();

  SUBCASE("real series has no J part") {
    const SliceSplit split = restrict_to_slice(RegularSeries{0.5, -1.0, 2.0}, I, J);
    for (const auto& c : split.G.coeffs()) CHECK(std::abs(c) == 0.0);
  }

  SUBCASE("pure J coefficient lands in G") {
    const SliceSplit split = restrict_to_slice(RegularSeries{Quaternion::j()}, I, J);
    CHECK(std::abs(split.F.coeffs()[0]) == 0.0);
    CHECK(std::abs(split.G.coeffs()[0] - std::complex<double>(1.0, 0.0)) == 0.0);
  }

  SUBCASE("slice-valued coefficients land in F") {
    const SliceSplit split = restrict_to_slice(RegularSeries{1.0, Quaternion::i()}, I, J);
    CHECK(std::abs(split.F.coeffs()[0] - std::complex<double>(1.0, 0.0)) == 0.0);
    CHECK(std::abs(split.F.coeffs()[1] - std::complex<double>(0.0, 1.0)) == 0.0);
    CHECK(std::abs(split.G.coeffs()[0]) == 0.0);
    CHECK(std::abs(split.G.coeffs()[1]) == 0.0);
  }

  SUBCASE("non-orthogonal J is rejected") {
    CHECK_THROWS_AS((void)restrict_to_slice(RegularSeries{1.0}, I, UnitImaginary(1.0, 1e-3, 0.0)),
                    std::domain_error);
  }

  SUBCASE("round trip and slice evaluation") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const UnitImaginary dir = testutil::random_direction(rng);
      const UnitImaginary perp = orthogonal_unit(dir);
      const RegularSeries f = testutil::random_series(rng, 16);
      const SliceSplit split = restrict_to_slice(f, dir, perp);

      const Quaternion jq = perp.as_quaternion();
      for (int n = 0; n <= f.degree(); ++n) {
        const Quaternion rebuilt =
            embed_in_slice(split.F.coeffs()[static_cast<std::size_t>(n)], dir) +
            embed_in_slice(split.G.coeffs()[static_cast<std::size_t>(n)], dir) * jq;
        CHECK(distance(rebuilt, f.coeff(n)) < 1e-14 * std::max(1.0, f.coeff(n).norm()));
      }

      const Quaternion z = testutil::random_slice_point(rng, dir, 1.0);
      const std::complex<double> zc = slice_components(z, dir);
      const Quaternion via_split = embed_in_slice(split.F.eval(zc), dir) +
                                   embed_in_slice(split.G.eval(zc), dir) * jq;
      CHECK(nearly_equal(via_split, eval(f, z), 1e-12));
    }
  }
}

TEST_CASE("series algebra properties") {
  Rng rng(43);

  SUBCASE("conjugation reverses the star product") {
    for (int trial = 0; trial < 20; ++trial) {
      const RegularSeries f = testutil::random_series(rng, 16);
      const RegularSeries g = testutil::random_series(rng, 16);
      CHECK(series_close(regular_conjugate(star_product(f, g)),
                         star_product(regular_conjugate(g), regular_conjugate(f)), 1e-13));
    }
  }

  SUBCASE("symmetrization commutes and is real") {
    for (int trial = 0; trial < 20; ++trial) {
      const RegularSeries f = testutil::random_series(rng, 16);
      const RegularSeries fc = regular_conjugate(f);
      CHECK(series_close(star_product(f, fc), star_product(fc, f), 1e-13));
    }
  }

  SUBCASE("star reciprocal inverts well-conditioned series") {
    for (int trial = 0; trial < 20; ++trial) {
      RegularSeries tail = testutil::random_series(rng, 8, 0.1);
      std::vector<Quaternion> coeffs = tail.coeffs();
      Quaternion head = testutil::random_quaternion(rng);
      while (head.norm() < 0.5) head = testutil::random_quaternion(rng);
      coeffs[0] = head;
      const RegularSeries f{std::move(coeffs)};
      const RegularSeries product = star_product(f, regular_reciprocal(f, 128));
      CHECK(distance(product.coeff(0), Quaternion(1.0)) < 1e-10);
      for (int n = 1; n <= 128; ++n) CHECK(product.coeff(n).norm() < 1e-10);
    }
  }

  SUBCASE("evaluation is multiplicative at real points") {
    for (int trial = 0; trial < 50; ++trial) {
      const RegularSeries f = testutil::random_series(rng, 12);
      const RegularSeries g = testutil::random_series(rng, 12);
      const Quaternion t(testutil::uniform(rng, -1.0, 1.0));
      CHECK(nearly_equal(eval(star_product(f, g), t), eval(f, t) * eval(g, t), 1e-12));
    }
  }

  SUBCASE("star product is pointwise on a common slice") {
    for (int trial = 0; trial < 20; ++trial) {
      const UnitImaginary I = testutil::random_direction(rng);
      std::vector<Quaternion> fc(13), gc(13);
      for (auto& c : fc)
        c = embed_in_slice({testutil::uniform(rng, -1.0, 1.0), testutil::uniform(rng, -1.0, 1.0)}, I);
      for (auto& c : gc)
        c = embed_in_slice({testutil::uniform(rng, -1.0, 1.0), testutil::uniform(rng, -1.0, 1.0)}, I);
      const RegularSeries f{std::move(fc)};
      const RegularSeries g{std::move(gc)};
      const Quaternion z = testutil::random_slice_point(rng, I, 1.0);
      CHECK(nearly_equal(eval(star_product(f, g), z), eval(f, z) * eval(g, z), 1e-11));
    }
  }

  SUBCASE("coefficient inner product is consistent with the norm") {
    for (int trial = 0; trial < 50; ++trial) {
      const RegularSeries f = testutil::random_series(rng, 24);
      const Quaternion ip = h2_inner_coeff(f, f);
      const double n2 = h2_norm(f) * h2_norm(f);
      CHECK(ip.imag_norm() < 1e-12 * std::max(1.0, n2));
      CHECK(nearly_equal(ip.w, n2, 1e-12));
    }
  }
}
