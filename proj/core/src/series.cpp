#include "quatmt/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace quatmt {

namespace {

int& max_degree_ref() {
  static int value = [] {
    if (const char* env = std::getenv("QUATMT_MAX_DEGREE")) {
      const int parsed = std::atoi(env);
      if (parsed >= 1) return parsed;
    }
    return 256;
  }();
  return value;
}

}  // namespace

RegularSeries::RegularSeries(std::vector<Quaternion> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

RegularSeries::RegularSeries(std::initializer_list<Quaternion> coeffs)
    : coeffs_(coeffs) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

RegularSeries RegularSeries::zero(int degree) {
  if (degree < 0) throw std::invalid_argument("RegularSeries: negative degree");
  return RegularSeries(std::vector<Quaternion>(degree + 1));
}

RegularSeries RegularSeries::monomial(int n, const Quaternion& c) {
  if (n < 0) throw std::invalid_argument("RegularSeries: negative exponent");
  std::vector<Quaternion> coeffs(n + 1);
  coeffs.back() = c;
  return RegularSeries(std::move(coeffs));
}

RegularSeries RegularSeries::truncated(int degree) const {
  if (degree < 0) throw std::invalid_argument("RegularSeries: negative degree");
  std::vector<Quaternion> out(degree + 1);
  const int keep = std::min(degree, this->degree());
  std::copy_n(coeffs_.begin(), keep + 1, out.begin());
  return RegularSeries(std::move(out));
}

RegularSeries operator+(const RegularSeries& f, const RegularSeries& g) {
  std::vector<Quaternion> out(std::max(f.degree(), g.degree()) + 1);
  for (int n = 0; n < static_cast<int>(out.size()); ++n) {
    out[n] = f.coeff(n) + g.coeff(n);
  }
  return RegularSeries(std::move(out));
}

RegularSeries operator-(const RegularSeries& f, const RegularSeries& g) {
  std::vector<Quaternion> out(std::max(f.degree(), g.degree()) + 1);
  for (int n = 0; n < static_cast<int>(out.size()); ++n) {
    out[n] = f.coeff(n) - g.coeff(n);
  }
  return RegularSeries(std::move(out));
}

RegularSeries right_scaled(const RegularSeries& f, const Quaternion& c) {
  std::vector<Quaternion> out(f.coeffs());
  for (Quaternion& a : out) a = a * c;
  return RegularSeries(std::move(out));
}

RegularSeries scaled(const RegularSeries& f, double s) {
  std::vector<Quaternion> out(f.coeffs());
  for (Quaternion& a : out) a *= s;
  return RegularSeries(std::move(out));
}

int max_truncation_degree() { return max_degree_ref(); }

void set_max_truncation_degree(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("set_max_truncation_degree: degree must be >= 1");
  }
  max_degree_ref() = degree;
}

Quaternion eval(const RegularSeries& f, const Quaternion& q) {
  const auto& a = f.coeffs();
  Quaternion acc = a.back();
  for (int n = f.degree() - 1; n >= 0; --n) {
    acc = a[static_cast<std::size_t>(n)] + q * acc;
  }
  return acc;
}

RegularSeries star_product(const RegularSeries& f, const RegularSeries& g) {
  const int nf = f.degree();
  const int ng = g.degree();
  const int cap = std::max({nf, ng, max_truncation_degree()});
  const int nout = std::min(nf + ng, cap);
  std::vector<Quaternion> out(nout + 1);
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (int ia = 0; ia <= std::min(nf, nout); ++ia) {
    const Quaternion& ca = a[static_cast<std::size_t>(ia)];
    const int jmax = std::min(ng, nout - ia);
    for (int jb = 0; jb <= jmax; ++jb) {
      out[static_cast<std::size_t>(ia + jb)] += ca * b[static_cast<std::size_t>(jb)];
    }
  }
  return RegularSeries(std::move(out));
}

RegularSeries regular_conjugate(const RegularSeries& f) {
  std::vector<Quaternion> out(f.coeffs());
  for (Quaternion& a : out) a = a.conj();
  return RegularSeries(std::move(out));
}

RegularSeries symmetrization(const RegularSeries& f) {
  RegularSeries s = star_product(f, regular_conjugate(f));
  const double nf = h2_norm(f);
  const double scale = std::max(1.0, nf * nf);
  std::vector<Quaternion> out(s.coeffs());
  for (Quaternion& c : out) {
    if (c.imag_norm() > 1e-13 * scale) {
      throw std::logic_error("symmetrization: coefficient drifted off the real axis");
    }
    c = Quaternion(c.w);
  }
  return RegularSeries(std::move(out));
}

RegularSeries invert_real_series(const RegularSeries& s, int degree) {
  const double scale = std::max(1.0, h2_norm(s));
  for (const Quaternion& c : s.coeffs()) {
    if (c.imag_norm() > 1e-13 * scale) {
      throw std::invalid_argument("invert_real_series: coefficients must be real");
    }
  }
  const double s0 = s.coeff(0).w;
  if (std::abs(s0) <= 1e-12) {
    throw std::domain_error("invert_real_series: symmetrization vanishes at 0");
  }
  if (degree < 0) degree = std::max(s.degree(), max_truncation_degree());

  std::vector<double> t(static_cast<std::size_t>(degree) + 1);
  t[0] = 1.0 / s0;
  for (int n = 1; n <= degree; ++n) {
    double acc = 0.0;
    const int kmax = std::min(n, s.degree());
    for (int k = 1; k <= kmax; ++k) {
      acc += s.coeff(k).w * t[static_cast<std::size_t>(n - k)];
    }
    t[static_cast<std::size_t>(n)] = -acc / s0;
  }

  std::vector<Quaternion> out(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) out[n] = Quaternion(t[n]);
  return RegularSeries(std::move(out));
}

RegularSeries regular_reciprocal(const RegularSeries& f, int degree) {
  if (degree < 0) degree = std::max(f.degree(), max_truncation_degree());
  const RegularSeries inv_sym = invert_real_series(symmetrization(f), degree);
  return star_product(inv_sym, regular_conjugate(f)).truncated(degree);
}

double h2_norm(const RegularSeries& f) {
  double acc = 0.0;
  for (const Quaternion& a : f.coeffs()) acc += a.norm_sq();
  return std::sqrt(acc);
}

Quaternion h2_inner_coeff(const RegularSeries& f, const RegularSeries& g) {
  Quaternion acc;
  const int n_max = std::min(f.degree(), g.degree());
  for (int n = 0; n <= n_max; ++n) {
    acc += g.coeff(n).conj() * f.coeff(n);
  }
  return acc;
}

ComplexSliceSeries::ComplexSliceSeries(std::vector<std::complex<double>> coeffs,
                                       const UnitImaginary& direction)
    : coeffs_(std::move(coeffs)), direction_(direction) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

std::complex<double> ComplexSliceSeries::eval(std::complex<double> z) const {
  std::complex<double> acc = coeffs_.back();
  for (int n = degree() - 1; n >= 0; --n) {
    acc = coeffs_[static_cast<std::size_t>(n)] + z * acc;
  }
  return acc;
}

SliceSplit restrict_to_slice(const RegularSeries& f, const UnitImaginary& I,
                             const UnitImaginary& J) {
  if (std::abs(I.dot(J)) > 1e-12) {
    throw std::domain_error("restrict_to_slice: J must be orthogonal to I");
  }
  const Quaternion iq = I.as_quaternion();
  const Quaternion jq = J.as_quaternion();
  const Quaternion kq = iq * jq;  // completes {1, I, J, IJ} as a real basis of H

  const int n_coeffs = f.degree() + 1;
  std::vector<std::complex<double>> fc(static_cast<std::size_t>(n_coeffs));
  std::vector<std::complex<double>> gc(static_cast<std::size_t>(n_coeffs));
  for (int n = 0; n < n_coeffs; ++n) {
    const Quaternion a = f.coeff(n);
    const double p = a.x * iq.x + a.y * iq.y + a.z * iq.z;
    const double r = a.x * jq.x + a.y * jq.y + a.z * jq.z;
    const double s = a.x * kq.x + a.y * kq.y + a.z * kq.z;
    fc[static_cast<std::size_t>(n)] = {a.w, p};
    gc[static_cast<std::size_t>(n)] = {r, s};
  }
  return {ComplexSliceSeries(std::move(fc), I), ComplexSliceSeries(std::move(gc), I)};
}

}  // namespace quatmt
