#include "quatmt/blaschke.hpp"

namespace quatmt {

BlaschkeParam::BlaschkeParam(const Quaternion& a) : a_(a) {
  if (a.norm() >= 1.0) {
    throw std::domain_error("BlaschkeParam: parameter must satisfy |a| < 1");
  }
}

Quaternion classical_blaschke(const BlaschkeParam& a, const Quaternion& q) {
  const Quaternion& av = a.value();
  return inverse(Quaternion(1.0) - q * av.conj()) * (q - av);
}

Quaternion blaschke_conjugation(const BlaschkeParam& a, const Quaternion& q) {
  const Quaternion d = Quaternion(1.0) - q * a.value();
  return inverse(d) * q * d;
}

RegularSeries regular_blaschke_series(const BlaschkeParam& a, int degree) {
  const Quaternion& av = a.value();
  const RegularSeries denominator({1.0, -av.conj()});
  const RegularSeries numerator({-av, 1.0});
  return star_product(regular_reciprocal(denominator, degree), numerator)
      .truncated(degree);
}

Quaternion regular_blaschke_eval(const BlaschkeParam& a, const Quaternion& q) {
  return classical_blaschke(a, blaschke_conjugation(a, q));
}

}  // namespace quatmt
