#pragma once

#include <functional>
#include <vector>

#include "quatmt/quaternion.hpp"
#include "quatmt/series.hpp"

namespace quatmt {

// Equispaced boundary samples of a function on one slice circle:
// values[m] = f(exp(I theta_m)) with theta_m = 2 pi m / M.
class SliceBoundaryGrid {
 public:
  SliceBoundaryGrid(const UnitImaginary& direction,
                    std::vector<Quaternion> values);

  static SliceBoundaryGrid sample(
      const std::function<Quaternion(const Quaternion&)>& f,
      const UnitImaginary& direction, int nodes);
  // Samples a series at radius * exp(I theta_m). Rational functions with
  // poles outside the closed ball are exact at radius 1; for a generic
  // series whose boundary behavior is unknown, sampling at 1 - 1e-6 is the
  // safe fallback.
  static SliceBoundaryGrid sample_series(const RegularSeries& f,
                                         const UnitImaginary& direction,
                                         int nodes, double radius = 1.0);

  const UnitImaginary& direction() const { return direction_; }
  const std::vector<Quaternion>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double theta(int m) const;
  Quaternion node(int m) const;  // exp(I theta_m)

 private:
  UnitImaginary direction_;
  std::vector<Quaternion> values_;
};

// Trapezoid discretization of (1/2pi) integral of conj(g) f over the circle.
// Both grids must share direction and node count.
Quaternion inner_product_quadrature(const SliceBoundaryGrid& f,
                                    const SliceBoundaryGrid& g);

// Poisson integral: reconstructs the interior slice value at r exp(I theta)
// from boundary samples. Requires 0 <= r < 1.
Quaternion poisson_eval(const SliceBoundaryGrid& boundary, double r,
                        double theta);

// Slice Cauchy integral (1/2piI) int dxi (xi - z)^{-1} f(xi) for z inside the
// slice disc; the I factors are composed in exactly that order.
Quaternion cauchy_slice_eval(const SliceBoundaryGrid& boundary,
                             const Quaternion& z);

// Regular Cauchy kernel (q^2 - 2 Re(s) q + |s|^2)^{-1} (conj(s) - q), the
// star-reciprocal of s - q evaluated pointwise. Singular on the sphere
// through s.
Quaternion cauchy_kernel(const Quaternion& s, const Quaternion& q);

// Regular Cauchy formula: reconstructs a regular function at any q in the
// open ball from boundary samples on a single slice, including points far
// from that slice. Requires |q| < 1 - 1e-9.
Quaternion regular_cauchy_eval(const SliceBoundaryGrid& boundary,
                               const Quaternion& q);

// Representation formula: extends a function known on the slice of I to the
// whole ball,
//   f(x + yJ) = [f(x+yI) + f(x-yI)]/2 + (JI/2) [f(x-yI) - f(x+yI)].
// Reduces to F_I(q) for q on the slice of I.
Quaternion extend_from_slice(
    const std::function<Quaternion(const Quaternion&)>& F_I,
    const UnitImaginary& I, const Quaternion& q);

}  // namespace quatmt
