#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "quatmt/quaternion.hpp"
#include "quatmt/series.hpp"

namespace testutil {

using quatmt::Quaternion;
using quatmt::RegularSeries;
using quatmt::UnitImaginary;

constexpr double pi = std::numbers::pi;
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Quaternion random_quaternion(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale),
          uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline UnitImaginary random_direction(Rng& rng) {
  return quatmt::unit_from_spherical(std::acos(uniform(rng, -1.0, 1.0)),
                                     uniform(rng, 0.0, 2.0 * pi));
}

inline Quaternion random_ball_point(Rng& rng, double rmax) {
  Quaternion q = random_quaternion(rng);
  const double n = q.norm();
  if (n < 1e-6) return Quaternion(0.5 * rmax);
  return q * (uniform(rng, 0.0, rmax) / n);
}

inline Quaternion random_boundary_point(Rng& rng) {
  Quaternion q = random_quaternion(rng);
  double n = q.norm();
  while (n < 1e-6) {
    q = random_quaternion(rng);
    n = q.norm();
  }
  return q / n;
}

inline Quaternion random_slice_point(Rng& rng, const UnitImaginary& I,
                                     double rmax) {
  return uniform(rng, 0.0, rmax) *
         quatmt::exp_slice(uniform(rng, 0.0, 2.0 * pi), I);
}

inline RegularSeries random_series(Rng& rng, int degree, double scale = 1.0) {
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Quaternion& c : coeffs) c = random_quaternion(rng, scale);
  return RegularSeries(std::move(coeffs));
}

inline bool series_close(const RegularSeries& f, const RegularSeries& g,
                         double tol) {
  const int n_max = std::max(f.degree(), g.degree());
  for (int n = 0; n <= n_max; ++n) {
    if (!quatmt::nearly_equal(f.coeff(n), g.coeff(n), tol)) return false;
  }
  return true;
}

}  // namespace testutil
