#include "quatmt/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "quatmt/blaschke.hpp"
#include "quatmt/hardy.hpp"
#include "quatmt/mt_system.hpp"
#include "quatmt/projection.hpp"
#include "quatmt/quaternion.hpp"
#include "quatmt/series.hpp"

namespace quatmt::selftest {

namespace {

constexpr double pi = std::numbers::pi;
using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Quaternion random_quaternion(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale),
          uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

UnitImaginary random_direction(Rng& rng) {
  return unit_from_spherical(std::acos(uniform(rng, -1.0, 1.0)),
                             uniform(rng, 0.0, 2.0 * pi));
}

Quaternion random_ball_point(Rng& rng, double rmax) {
  Quaternion q = random_quaternion(rng);
  const double n = q.norm();
  if (n < 1e-6) return Quaternion(0.5 * rmax);
  return q * (uniform(rng, 0.0, rmax) / n);
}

Quaternion random_boundary_point(Rng& rng) {
  Quaternion q = random_quaternion(rng);
  double n = q.norm();
  while (n < 1e-6) {
    q = random_quaternion(rng);
    n = q.norm();
  }
  return q / n;
}

Quaternion random_slice_point(Rng& rng, const UnitImaginary& I, double rmax) {
  return uniform(rng, 0.0, rmax) * exp_slice(uniform(rng, 0.0, 2.0 * pi), I);
}

RegularSeries random_series(Rng& rng, int degree, double scale = 1.0) {
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Quaternion& c : coeffs) c = random_quaternion(rng, scale);
  return RegularSeries(std::move(coeffs));
}

PoleSequence random_slice_poles(Rng& rng, const UnitImaginary& I, int count,
                                double rmax) {
  std::vector<Quaternion> poles(static_cast<std::size_t>(count));
  for (Quaternion& a : poles) a = random_slice_point(rng, I, rmax);
  return PoleSequence(std::move(poles), I);
}

bool check_norm_multiplicative(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion a = random_quaternion(rng, 2.0);
    const Quaternion b = random_quaternion(rng, 2.0);
    if (!nearly_equal((a * b).norm(), a.norm() * b.norm(), 1e-12)) {
      log << "  |ab| != |a||b| at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool check_conjugate_antihomomorphism(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion a = random_quaternion(rng, 2.0);
    const Quaternion b = random_quaternion(rng, 2.0);
    if (!nearly_equal((a * b).conj(), b.conj() * a.conj(), 1e-14)) {
      log << "  conj(ab) != conj(b)conj(a) at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool check_spherical_unit_square(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const UnitImaginary I =
        unit_from_spherical(uniform(rng, 0.0, pi), uniform(rng, 0.0, 2.0 * pi));
    const Quaternion q = I.as_quaternion();
    if (!nearly_equal(q * q, Quaternion(-1.0), 1e-14)) {
      log << "  I*I != -1 at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool check_rotation_isometry(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion q = random_boundary_point(rng);
    const Quaternion v = random_quaternion(rng).imag();
    const Quaternion r = rotate(q, v);
    if (!nearly_equal(r.norm(), v.norm(), 1e-12) || std::abs(r.w) > 1e-12) {
      log << "  rotation broke norm or purity at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool check_exp_angle_addition(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 4);
  for (int trial = 0; trial < 200; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const double a = uniform(rng, -2.0 * pi, 2.0 * pi);
    const double b = uniform(rng, -2.0 * pi, 2.0 * pi);
    if (!nearly_equal(exp_slice(a, I) * exp_slice(b, I), exp_slice(a + b, I),
                      1e-12)) {
      log << "  exponentials on one slice failed to add angles\n";
      return false;
    }
  }
  return true;
}

bool check_associativity(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 5);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const Quaternion c = random_quaternion(rng);
    if (!nearly_equal((a * b) * c, a * (b * c), 1e-12)) {
      log << "  associativity failed at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool series_nearly_equal(const RegularSeries& f, const RegularSeries& g,
                         double tol) {
  const int n_max = std::max(f.degree(), g.degree());
  for (int n = 0; n <= n_max; ++n) {
    if (!nearly_equal(f.coeff(n), g.coeff(n), tol)) return false;
  }
  return true;
}

bool check_conjugate_reverses_star(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 6);
  for (int trial = 0; trial < 20; ++trial) {
    const RegularSeries f = random_series(rng, 16);
    const RegularSeries g = random_series(rng, 16);
    if (!series_nearly_equal(regular_conjugate(star_product(f, g)),
                             star_product(regular_conjugate(g), regular_conjugate(f)),
                             1e-13)) {
      log << "  (f*g)^c != g^c * f^c at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool check_symmetrization_real_commute(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 7);
  for (int trial = 0; trial < 20; ++trial) {
    const RegularSeries f = random_series(rng, 16);
    const RegularSeries fc = regular_conjugate(f);
    if (!series_nearly_equal(star_product(f, fc), star_product(fc, f), 1e-13)) {
      log << "  f*f^c != f^c*f at trial " << trial << "\n";
      return false;
    }
    const RegularSeries fs = symmetrization(f);
    for (const Quaternion& c : fs.coeffs()) {
      if (c.imag_norm() != 0.0) {
        log << "  symmetrization kept an imaginary residue\n";
        return false;
      }
    }
  }
  return true;
}

bool check_reciprocal_identity(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 8);
  for (int trial = 0; trial < 20; ++trial) {
    RegularSeries f = random_series(rng, 8, 0.1);
    std::vector<Quaternion> coeffs = f.coeffs();
    Quaternion head = random_quaternion(rng);
    while (head.norm() < 0.5) head = random_quaternion(rng);
    coeffs[0] = head;
    f = RegularSeries(std::move(coeffs));

    const RegularSeries product = star_product(f, regular_reciprocal(f, 128));
    if (distance(product.coeff(0), Quaternion(1.0)) > 1e-10) {
      log << "  f * f^{-*} has a bad constant term\n";
      return false;
    }
    for (int n = 1; n <= 128; ++n) {
      if (product.coeff(n).norm() > 1e-10) {
        log << "  f * f^{-*} has tail residue " << product.coeff(n).norm()
            << " at degree " << n << "\n";
        return false;
      }
    }
  }
  return true;
}

bool check_eval_real_homomorphism(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 9);
  for (int trial = 0; trial < 50; ++trial) {
    const RegularSeries f = random_series(rng, 12);
    const RegularSeries g = random_series(rng, 12);
    const double t = uniform(rng, -1.0, 1.0);
    if (!nearly_equal(eval(star_product(f, g), Quaternion(t)),
                      eval(f, Quaternion(t)) * eval(g, Quaternion(t)), 1e-12)) {
      log << "  eval(f*g, t) != eval(f,t) eval(g,t) for real t\n";
      return false;
    }
  }
  return true;
}

RegularSeries random_slice_series(Rng& rng, const UnitImaginary& I, int degree) {
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Quaternion& c : coeffs) {
    c = embed_in_slice({uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)}, I);
  }
  return RegularSeries(std::move(coeffs));
}

bool check_slice_pointwise_product(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 10);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const RegularSeries f = random_slice_series(rng, I, 12);
    const RegularSeries g = random_slice_series(rng, I, 12);
    const Quaternion z = random_slice_point(rng, I, 1.0);
    if (!nearly_equal(eval(star_product(f, g), z), eval(f, z) * eval(g, z),
                      1e-11)) {
      log << "  star product is not pointwise on a slice\n";
      return false;
    }
  }
  return true;
}

bool check_parseval_consistency(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 11);
  for (int trial = 0; trial < 50; ++trial) {
    const RegularSeries f = random_series(rng, 24);
    const Quaternion ip = h2_inner_coeff(f, f);
    const double n = h2_norm(f);
    if (ip.imag_norm() > 1e-12 * std::max(1.0, n * n) ||
        !nearly_equal(ip.w, n * n, 1e-12)) {
      log << "  <f,f> disagrees with ||f||^2\n";
      return false;
    }
  }
  return true;
}

bool check_slice_split_roundtrip(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 12);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const UnitImaginary J = orthogonal_unit(I);
    const RegularSeries f = random_series(rng, 16);
    const SliceSplit split = restrict_to_slice(f, I, J);

    const Quaternion jq = J.as_quaternion();
    for (int n = 0; n <= f.degree(); ++n) {
      const Quaternion rebuilt =
          embed_in_slice(split.F.coeffs()[static_cast<std::size_t>(n)], I) +
          embed_in_slice(split.G.coeffs()[static_cast<std::size_t>(n)], I) * jq;
      if (!nearly_equal(rebuilt, f.coeff(n), 1e-14)) {
        log << "  slice split failed to reassemble coefficient " << n << "\n";
        return false;
      }
    }
    const Quaternion z = random_slice_point(rng, I, 1.0);
    const std::complex<double> zc = slice_components(z, I);
    const Quaternion via_split = embed_in_slice(split.F.eval(zc), I) +
                                 embed_in_slice(split.G.eval(zc), I) * jq;
    if (!nearly_equal(via_split, eval(f, z), 1e-12)) {
      log << "  F(z) + G(z)J disagrees with direct evaluation\n";
      return false;
    }
  }
  return true;
}

bool check_factor_commutation(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 13);
  for (int trial = 0; trial < 20; ++trial) {
    const Quaternion a = random_ball_point(rng, 0.9);
    const RegularSeries reciprocal =
        regular_reciprocal(RegularSeries({1.0, -a.conj()}), 128);
    const RegularSeries linear({-a, 1.0});
    if (!series_nearly_equal(star_product(reciprocal, linear),
                             star_product(linear, reciprocal), 1e-13)) {
      log << "  Blaschke factors failed to commute\n";
      return false;
    }
  }
  return true;
}

bool check_blaschke_series_vs_closed(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 14);
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeParam a(random_ball_point(rng, 0.8));
    const RegularSeries series = regular_blaschke_series(a, 128);
    const Quaternion q = random_ball_point(rng, 0.9);
    if (distance(eval(series, q), regular_blaschke_eval(a, q)) > 1e-10) {
      log << "  series and closed-form Blaschke values disagree\n";
      return false;
    }
  }
  return true;
}

bool check_blaschke_modulus_map(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 15);
  const BlaschkeParam a(random_ball_point(rng, 0.9));
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion inside = random_ball_point(rng, 0.999);
    if (regular_blaschke_eval(a, inside).norm() >= 1.0) {
      log << "  interior point mapped outside the ball\n";
      return false;
    }
    const Quaternion boundary = random_boundary_point(rng);
    if (std::abs(regular_blaschke_eval(a, boundary).norm() - 1.0) > 1e-12) {
      log << "  boundary point left the boundary\n";
      return false;
    }
  }
  return true;
}

bool check_blaschke_slice_preservation(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 16);
  for (int trial = 0; trial < 50; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const BlaschkeParam a(random_slice_point(rng, I, 0.9));
    const Quaternion z = random_slice_point(rng, I, 1.0);
    const Quaternion value = regular_blaschke_eval(a, z);
    if (slice_residual(value, I) > 1e-12 ||
        !nearly_equal(value, classical_blaschke(a, z), 1e-12)) {
      log << "  regular Blaschke left the slice or differs from classical\n";
      return false;
    }
  }
  return true;
}

bool check_orthonormality(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 17);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 8, 0.8);
  const MTSystem sys = build_mt(poles, 8, 256);
  const double dev_coeff =
      max_deviation_from_identity(gram_matrix(sys, GramMethod::coeff));
  const double dev_quad =
      max_deviation_from_identity(gram_matrix(sys, GramMethod::quadrature, 1024));
  if (dev_coeff >= 1e-8 || dev_quad >= 1e-8) {
    log << "  Gram deviation coeff=" << dev_coeff << " quad=" << dev_quad << "\n";
    return false;
  }
  return true;
}

bool check_gram_method_agreement(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 18);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 6, 0.8);
  const MTSystem sys = build_mt(poles, 6, 256);
  const QuaternionMatrix a = gram_matrix(sys, GramMethod::coeff);
  const QuaternionMatrix b = gram_matrix(sys, GramMethod::quadrature, 1024);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      if (distance(a.at(r, c), b.at(r, c)) > 1e-9) {
        log << "  Gram methods disagree at (" << r << "," << c << ")\n";
        return false;
      }
    }
  }
  return true;
}

bool check_laguerre_equivalence(std::uint64_t seed, std::ostream& log) {
  // |a| <= 0.6: the closed form's high reciprocal power cancels catastrophically
  // for larger moduli and the 1e-12 comparison stops being meaningful
  Rng rng(seed + 19);
  const UnitImaginary I = random_direction(rng);
  const Quaternion a = random_slice_point(rng, I, 0.6);
  const PoleSequence poles(std::vector<Quaternion>(8, a), I);
  const MTSystem sys = build_mt(poles, 8, 192);
  for (int n = 0; n < 8; ++n) {
    const RegularSeries closed = laguerre_closed_form(BlaschkeParam(a), n, 192);
    if (!series_nearly_equal(closed, sys.basis[static_cast<std::size_t>(n)], 1e-12)) {
      log << "  closed Laguerre form disagrees with the product build at n=" << n
          << "\n";
      return false;
    }
  }
  return true;
}

bool check_trigonometric_degeneration(std::uint64_t, std::ostream& log) {
  const PoleSequence poles(std::vector<Quaternion>(6, Quaternion()), UnitImaginary::i());
  const MTSystem sys = build_mt(poles, 6, 32);
  for (int k = 1; k <= 6; ++k) {
    const RegularSeries& phi = sys.basis[static_cast<std::size_t>(k - 1)];
    for (int n = 0; n <= phi.degree(); ++n) {
      const Quaternion expected = (n == k - 1) ? Quaternion(1.0) : Quaternion();
      const Quaternion got = phi.coeff(n);
      if (got.w != expected.w || got.x != 0.0 || got.y != 0.0 || got.z != 0.0) {
        log << "  zero poles did not give exact monomials\n";
        return false;
      }
    }
  }
  return true;
}

bool check_basis_norms(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 20);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 8, 0.8);
  const MTSystem sys = build_mt(poles, 8, 256);
  for (const RegularSeries& phi : sys.basis) {
    if (std::abs(h2_norm(phi) - 1.0) > 1e-9) {
      log << "  basis function norm drifted from 1\n";
      return false;
    }
  }
  return true;
}

bool check_parseval_quadrature(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 21);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const RegularSeries f = random_series(rng, 8);
    const RegularSeries g = random_series(rng, 8);
    const Quaternion quad =
        inner_product_quadrature(SliceBoundaryGrid::sample_series(f, I, 32),
                                 SliceBoundaryGrid::sample_series(g, I, 32));
    if (distance(quad, h2_inner_coeff(f, g)) > 1e-10) {
      log << "  quadrature inner product disagrees with coefficient sum\n";
      return false;
    }
  }
  return true;
}

bool check_poisson_cauchy_consistency(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 22);
  for (int trial = 0; trial < 10; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const RegularSeries f = random_series(rng, 32);
    const SliceBoundaryGrid grid = SliceBoundaryGrid::sample_series(f, I, 1024);
    const double r = uniform(rng, 0.0, 0.9);
    const double theta = uniform(rng, 0.0, 2.0 * pi);
    const Quaternion z = r * exp_slice(theta, I);
    const Quaternion reference = eval(f, z);
    if (distance(poisson_eval(grid, r, theta), reference) > 1e-9 ||
        distance(cauchy_slice_eval(grid, z), reference) > 1e-9) {
      log << "  Poisson or slice Cauchy reconstruction drifted\n";
      return false;
    }
  }
  return true;
}

bool check_off_slice_reconstruction(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 23);
  const RegularSeries f = random_series(rng, 32);
  const SliceBoundaryGrid grid =
      SliceBoundaryGrid::sample_series(f, UnitImaginary::i(), 2048);
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion q = random_ball_point(rng, 0.8);
    if (distance(regular_cauchy_eval(grid, q), eval(f, q)) > 1e-8) {
      log << "  off-slice reconstruction failed at trial " << trial << "\n";
      return false;
    }
  }
  return true;
}

bool check_extension_roundtrip(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 24);
  for (int trial = 0; trial < 50; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const RegularSeries f = random_series(rng, 16);
    const Quaternion q = random_ball_point(rng, 0.95);
    const Quaternion extended = extend_from_slice(
        [&f](const Quaternion& zz) { return eval(f, zz); }, I, q);
    if (!nearly_equal(extended, eval(f, q), 1e-11)) {
      log << "  extension of the restriction changed the value\n";
      return false;
    }
  }
  return true;
}

bool check_kernel_slice_reduction(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 25);
  for (int trial = 0; trial < 50; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const Quaternion s = exp_slice(uniform(rng, 0.0, 2.0 * pi), I);
    const Quaternion q = random_slice_point(rng, I, 0.8);
    const std::complex<double> expected =
        1.0 / (slice_components(s, I) - slice_components(q, I));
    if (distance(cauchy_kernel(s, q), embed_in_slice(expected, I)) > 1e-13) {
      log << "  Cauchy kernel disagrees with the complex kernel on a slice\n";
      return false;
    }
  }
  return true;
}

bool check_interpolation(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 26);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitImaginary I = random_direction(rng);
    const int n = 1 + static_cast<int>(rng() % 8);
    const PoleSequence poles = random_slice_poles(rng, I, n, 0.8);
    const MTSystem sys = build_mt(poles, n, 256);
    const RegularSeries f = random_series(rng, 16);
    for (double r : interpolation_residuals(f, sys)) {
      if (r > 1e-7) {
        log << "  interpolation residual " << r << " at trial " << trial << "\n";
        return false;
      }
    }
  }
  return true;
}

bool check_darboux_christoffel(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 27);
  const UnitImaginary I = random_direction(rng);
  const int n = 1 + static_cast<int>(rng() % 8);
  const PoleSequence poles = random_slice_poles(rng, I, n, 0.8);
  const MTSystem sys = build_mt(poles, n, 64);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion z = random_slice_point(rng, I, 1.0);
    const Quaternion w = random_slice_point(rng, I, 1.0);
    const std::complex<double> zc = slice_components(z, I);
    const std::complex<double> wc = slice_components(w, I);
    std::complex<double> sum = 0.0;
    for (int l = 1; l <= n; ++l) {
      const std::complex<double> pz =
          slice_components(mt_eval_at_slice_point(sys, l, z), I);
      const std::complex<double> pw =
          slice_components(mt_eval_at_slice_point(sys, l, w), I);
      sum += pz * (1.0 - zc * std::conj(wc)) * std::conj(pw);
    }
    if (distance(dirichlet_kernel(sys, z, w), embed_in_slice(sum, I)) > 1e-9) {
      log << "  kernel sum and closed form disagree\n";
      return false;
    }
  }
  return true;
}

bool check_best_approximation(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 28);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 4, 0.8);
  const MTSystem sys = build_mt(poles, 4, 128);
  const RegularSeries f = random_series(rng, 16);
  const ProjectionResult pr = project(f, sys);
  const Quaternion deltas[4] = {{0.01, 0, 0, 0}, {0, 0.01, 0, 0},
                                {0, 0, 0.01, 0}, {0, 0, 0, 0.01}};
  for (int k = 0; k < sys.size(); ++k) {
    for (const Quaternion& delta : deltas) {
      for (double sign : {1.0, -1.0}) {
        const RegularSeries perturbed =
            pr.approximant +
            right_scaled(sys.basis[static_cast<std::size_t>(k)], sign * delta);
        if (h2_norm(f - perturbed) <= pr.residual_norm) {
          log << "  perturbing a coefficient failed to increase the residual\n";
          return false;
        }
      }
    }
  }
  return true;
}

bool check_idempotence(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 29);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 6, 0.8);
  const MTSystem sys = build_mt(poles, 6, 256);
  const RegularSeries f = random_series(rng, 16);
  const ProjectionResult once = project(f, sys);
  const ProjectionResult twice = project(once.approximant, sys);
  for (int k = 0; k < sys.size(); ++k) {
    if (distance(once.coefficients[static_cast<std::size_t>(k)],
                 twice.coefficients[static_cast<std::size_t>(k)]) > 1e-10) {
      log << "  projecting the approximant changed coefficient " << k << "\n";
      return false;
    }
  }
  return true;
}

bool check_pythagoras(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 30);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 6, 0.8);
  const MTSystem sys = build_mt(poles, 6, 256);
  const RegularSeries f = random_series(rng, 16);
  const ProjectionResult pr = project(f, sys);
  double captured = 0.0;
  for (const Quaternion& c : pr.coefficients) captured += c.norm_sq();
  const double total = h2_norm(f);
  if (!nearly_equal(total * total,
                    captured + pr.residual_norm * pr.residual_norm, 1e-8)) {
    log << "  ||f||^2 != sum |c_k|^2 + residual^2\n";
    return false;
  }
  return true;
}

bool check_monotone_convergence(std::uint64_t seed, std::ostream& log) {
  Rng rng(seed + 31);
  const UnitImaginary I = random_direction(rng);
  const PoleSequence poles = random_slice_poles(rng, I, 6, 0.8);
  const RegularSeries f = random_series(rng, 16);
  const auto table = convergence_table(f, poles, 6, 128);
  for (std::size_t idx = 1; idx < table.size(); ++idx) {
    if (table[idx].second > table[idx - 1].second + 1e-12) {
      log << "  residuals increased between n=" << table[idx - 1].first
          << " and n=" << table[idx].first << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"quat.norm-multiplicative", check_norm_multiplicative},
      {"quat.conjugate-antihomomorphism", check_conjugate_antihomomorphism},
      {"quat.spherical-unit-square", check_spherical_unit_square},
      {"quat.rotation-isometry", check_rotation_isometry},
      {"quat.exp-angle-addition", check_exp_angle_addition},
      {"quat.associativity", check_associativity},
      {"series.conjugate-reverses-star", check_conjugate_reverses_star},
      {"series.symmetrization-real-commute", check_symmetrization_real_commute},
      {"series.reciprocal-identity", check_reciprocal_identity},
      {"series.eval-real-homomorphism", check_eval_real_homomorphism},
      {"series.slice-pointwise-product", check_slice_pointwise_product},
      {"series.parseval-consistency", check_parseval_consistency},
      {"series.slice-split-roundtrip", check_slice_split_roundtrip},
      {"blaschke.factor-commutation", check_factor_commutation},
      {"blaschke.series-matches-closed-form", check_blaschke_series_vs_closed},
      {"blaschke.modulus-map", check_blaschke_modulus_map},
      {"blaschke.slice-preservation", check_blaschke_slice_preservation},
      {"mt.orthonormality", check_orthonormality},
      {"mt.gram-method-agreement", check_gram_method_agreement},
      {"mt.laguerre-equivalence", check_laguerre_equivalence},
      {"mt.trigonometric-degeneration", check_trigonometric_degeneration},
      {"mt.basis-norms", check_basis_norms},
      {"hardy.parseval-quadrature", check_parseval_quadrature},
      {"hardy.poisson-cauchy-consistency", check_poisson_cauchy_consistency},
      {"hardy.off-slice-reconstruction", check_off_slice_reconstruction},
      {"hardy.extension-roundtrip", check_extension_roundtrip},
      {"hardy.kernel-slice-reduction", check_kernel_slice_reduction},
      {"projection.interpolation", check_interpolation},
      {"projection.darboux-christoffel", check_darboux_christoffel},
      {"projection.best-approximation", check_best_approximation},
      {"projection.idempotence", check_idempotence},
      {"projection.pythagoras", check_pythagoras},
      {"projection.monotone-convergence", check_monotone_convergence},
  };
  return checks;
}

int run_checks(const std::vector<Check>& checks, std::uint64_t seed,
               std::ostream& out) {
  int failures = 0;
  for (const Check& check : checks) {
    bool ok = false;
    try {
      ok = check.run(seed, out);
    } catch (const std::exception& e) {
      out << "  " << check.name << " threw: " << e.what() << "\n";
    }
    out << (ok ? "PASS" : "FAIL") << "  " << check.name << "\n";
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace quatmt::selftest
