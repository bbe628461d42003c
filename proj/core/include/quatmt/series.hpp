#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "quatmt/quaternion.hpp"

namespace quatmt {

// Truncated power series sum_{n=0}^{N} q^n a_n with quaternion coefficients.
// Coefficients sit on the RIGHT of the powers; this convention is fixed here
// once and used throughout the library. Such series are the computational
// representation of slice regular functions on the unit ball.
class RegularSeries {
 public:
  RegularSeries() : coeffs_(1) {}
  explicit RegularSeries(std::vector<Quaternion> coeffs);
  RegularSeries(std::initializer_list<Quaternion> coeffs);

  static RegularSeries zero(int degree);
  static RegularSeries constant(const Quaternion& c) { return RegularSeries({c}); }
  // q^n * c
  static RegularSeries monomial(int n, const Quaternion& c = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Quaternion>& coeffs() const { return coeffs_; }

  // Coefficient of q^n; zero beyond the stored degree.
  Quaternion coeff(int n) const {
    return (n >= 0 && n <= degree()) ? coeffs_[static_cast<std::size_t>(n)]
                                     : Quaternion{};
  }

  // Cut or zero-pad to the given degree.
  RegularSeries truncated(int degree) const;

 private:
  std::vector<Quaternion> coeffs_;  // size degree()+1, never empty
};

RegularSeries operator+(const RegularSeries& f, const RegularSeries& g);
RegularSeries operator-(const RegularSeries& f, const RegularSeries& g);

// Multiplies every coefficient by c from the right: f(q) * c as a function.
RegularSeries right_scaled(const RegularSeries& f, const Quaternion& c);
// Real scalars are central, so the side does not matter.
RegularSeries scaled(const RegularSeries& f, double s);

// Global cap on the degree star products are allowed to grow to. Initialized
// from the QUATMT_MAX_DEGREE environment variable when set, 256 otherwise.
int max_truncation_degree();
void set_max_truncation_degree(int degree);

// Horner evaluation of sum q^n a_n; powers multiply from the left. Values for
// |q| > 1 are extrapolation beyond the truncation's reach and carry
// uncontrolled error.
Quaternion eval(const RegularSeries& f, const Quaternion& q);

// Regular (convolution) product: coefficient n is sum_k a_k b_{n-k} with the
// factor order preserved. The result degree is min(Nf+Ng, cap) where the cap
// never cuts below either input's degree.
RegularSeries star_product(const RegularSeries& f, const RegularSeries& g);

// Componentwise quaternion conjugation of the coefficients.
RegularSeries regular_conjugate(const RegularSeries& f);

// f * f^c. The result provably has real coefficients; the imaginary residue
// is checked against 1e-13 (scaled) and then zeroed exactly, since drift
// beyond rounding signals a bug in the convolution.
RegularSeries symmetrization(const RegularSeries& f);

// Reciprocal of a real-coefficient series by the standard recursion
// s0 t_n = -sum_{k>=1} s_k t_{n-k}. degree < 0 selects
// max(s.degree(), max_truncation_degree()).
RegularSeries invert_real_series(const RegularSeries& s, int degree = -1);

// Regular reciprocal (f^s)^{-1} * f^c, the star-inverse of f. Defined here
// at the series level; the result is meaningful where the symmetrization
// does not vanish, which for all Blaschke-type denominators with |a| < 1
// is the whole closed ball.
RegularSeries regular_reciprocal(const RegularSeries& f, int degree = -1);

// sqrt(sum_n |a_n|^2), the Hardy-space norm in coefficient form.
double h2_norm(const RegularSeries& f);

// sum_n conj(b_n) a_n with a from f and b from g.
Quaternion h2_inner_coeff(const RegularSeries& f, const RegularSeries& g);

// Power series with coefficients in a single slice plane, stored as complex
// numbers relative to the slice direction.
class ComplexSliceSeries {
 public:
  ComplexSliceSeries(std::vector<std::complex<double>> coeffs,
                     const UnitImaginary& direction);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  const UnitImaginary& direction() const { return direction_; }

  std::complex<double> eval(std::complex<double> z) const;

 private:
  std::vector<std::complex<double>> coeffs_;
  UnitImaginary direction_;
};

struct SliceSplit {
  ComplexSliceSeries F;
  ComplexSliceSeries G;
};

// Splits each coefficient as a_n = alpha_n + beta_n J over the basis
// {1, I, J, IJ}; F collects the alpha_n and G the beta_n, both as series in
// the slice of I. Requires J orthogonal to I. On the slice of I,
// eval(f, z) = F(z) + G(z) J.
SliceSplit restrict_to_slice(const RegularSeries& f, const UnitImaginary& I,
                             const UnitImaginary& J);

}  // namespace quatmt
