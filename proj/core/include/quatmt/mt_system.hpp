#pragma once

#include <optional>
#include <vector>

#include "quatmt/blaschke.hpp"
#include "quatmt/quaternion.hpp"
#include "quatmt/series.hpp"

namespace quatmt {

// Ordered parameters a_1, a_2, ... in the open unit ball that generate a
// Malmquist-Takenaka system. When a common slice direction is recorded, every
// parameter must lie in that slice plane (real parameters lie in all of them).
class PoleSequence {
 public:
  PoleSequence(std::vector<Quaternion> params,
               std::optional<UnitImaginary> common_slice = std::nullopt);

  const std::vector<Quaternion>& params() const { return params_; }
  const std::optional<UnitImaginary>& common_slice() const {
    return common_slice_;
  }
  int size() const { return static_cast<int>(params_.size()); }

 private:
  std::vector<Quaternion> params_;
  std::optional<UnitImaginary> common_slice_;
};

// The family Phi_1..Phi_n as truncated series, plus closed-form slice
// evaluators. Phi_k carries k-1 regular Blaschke factors and the
// normalization sqrt(1-|a_k|^2).
struct MTSystem {
  PoleSequence poles;
  std::vector<RegularSeries> basis;
  int truncation_degree = 0;

  int size() const { return static_cast<int>(basis.size()); }
};

// Builds the first n basis functions at the given series degree:
// Phi_k = sqrt(1-|a_k|^2) (star-prod of the first k-1 regular Blaschke
// series) * (1 - q conj(a_k))^{-*}. n = 0 yields an empty system.
MTSystem build_mt(const PoleSequence& poles, int n, int degree);

// Constant-pole basis element with n Blaschke factors, built from the closed
// form sqrt(1-|a|^2) (q-a)^{*n} * (1 - q conj(a))^{-*(n+1)}. Equals the
// iterative construction with a constant pole sequence.
RegularSeries laguerre_closed_form(const BlaschkeParam& a, int n, int degree);

// Closed-form pointwise evaluation of Phi_k (k is 1-based) at a point of the
// common slice; exact on the boundary circle. Requires |z| <= 1.
Quaternion mt_eval_at_slice_point(const MTSystem& sys, int k,
                                  const Quaternion& z);

// The same evaluation in the complex coordinates of the common slice.
std::complex<double> mt_eval_complex(const MTSystem& sys, int k,
                                     std::complex<double> z);

// Closed-form samples of Phi_k at the equispaced boundary nodes
// exp(I 2 pi t / nodes) of the common slice.
std::vector<std::complex<double>> mt_boundary_samples(const MTSystem& sys,
                                                      int k, int nodes);

// Same, at radius * exp(I theta) on the common slice (radius <= 1).
Quaternion mt_eval_on_slice(const MTSystem& sys, int k, double theta,
                            double radius = 1.0);

struct QuaternionMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Quaternion> data;

  QuaternionMatrix() = default;
  QuaternionMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  Quaternion& at(int r, int c) {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  const Quaternion& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

enum class GramMethod {
  coeff,       // truncated coefficient sums
  quadrature,  // trapezoid rule on the common-slice boundary circle
};

// G.at(m, n) = <Phi_{n+1}, Phi_{m+1}>. The quadrature method needs a common
// slice; the coefficient method works for any pole sequence.
QuaternionMatrix gram_matrix(const MTSystem& sys, GramMethod method,
                             int nodes = 1024);

double max_deviation_from_identity(const QuaternionMatrix& m);

// Pointwise product form of the non-regular system kept for comparison:
// sqrt(1-|a_k|^2) B_{a_1}(q) ... B_{a_{k-1}}(q) (1 - q conj(a_k))^{-1} in the
// written order. Not slice regular off the common slice.
Quaternion classical_mt_eval(const PoleSequence& poles, int k,
                             const Quaternion& q);

}  // namespace quatmt
