#pragma once

#include "quatmt/quaternion.hpp"
#include "quatmt/series.hpp"

namespace quatmt {

// Parameter of a Blaschke function; must lie in the open unit ball.
class BlaschkeParam {
 public:
  explicit BlaschkeParam(const Quaternion& a);

  const Quaternion& value() const { return a_; }

 private:
  Quaternion a_;
};

// Direct quaternionic extension (1 - q conj(a))^{-1} (q - a). Maps the open
// ball into itself and the boundary onto itself, but is not slice regular.
Quaternion classical_blaschke(const BlaschkeParam& a, const Quaternion& q);

// The same map in the complex coordinates of one slice, where it coincides
// with the regular one.
inline std::complex<double> complex_blaschke(std::complex<double> a,
                                             std::complex<double> z) {
  return (z - a) / (1.0 - std::conj(a) * z);
}

// The conjugation (1 - qa)^{-1} q (1 - qa), a norm-preserving diffeomorphism
// of the ball. Composing the classical Blaschke map with it yields the
// regular one.
Quaternion blaschke_conjugation(const BlaschkeParam& a, const Quaternion& q);

// Series of the regular Blaschke function
// (1 - q conj(a))^{-*} * (q - a) to the given degree.
RegularSeries regular_blaschke_series(const BlaschkeParam& a, int degree);

// Closed-form value of the regular Blaschke function on the closed ball,
// evaluated as the classical map after conjugation; exact on the boundary
// where series truncation is weakest.
Quaternion regular_blaschke_eval(const BlaschkeParam& a, const Quaternion& q);

}  // namespace quatmt
