#pragma once

#include <utility>
#include <vector>

#include "quatmt/hardy.hpp"
#include "quatmt/mt_system.hpp"
#include "quatmt/series.hpp"

namespace quatmt {

struct ProjectionResult {
  std::vector<Quaternion> coefficients;  // <f, Phi_k>, k = 1..n
  RegularSeries approximant;             // sum Phi_k(z) <f, Phi_k>
  double residual_norm = 0.0;            // ||f - P_n f||
};

// Expansion coefficients <f, Phi_k>. The series overload sums conjugated
// coefficient products; the grid overload splits the samples as F + GJ and
// recombines the two scalar-slice quadratures as c_F + c_G J. Both require
// the system to have a common slice, and a grid must live on that slice.
std::vector<Quaternion> mt_coefficients(const RegularSeries& f,
                                        const MTSystem& sys);
std::vector<Quaternion> mt_coefficients(const SliceBoundaryGrid& f,
                                        const MTSystem& sys);

// Orthogonal projection onto span{Phi_1..Phi_n}; each coefficient multiplies
// its basis function from the right. For a series input the residual is the
// coefficient-space norm of f minus the approximant; for a grid input it is
// the Pythagoras complement sqrt(<f,f> - sum |c_k|^2).
ProjectionResult project(const RegularSeries& f, const MTSystem& sys);
ProjectionResult project(const SliceBoundaryGrid& f, const MTSystem& sys);

// Reproducing (Dirichlet) kernel of the first n basis functions on the
// common slice. Evaluates both the partial sum
//   sum_l Phi_l(z)(1 - z conj(w)) conj(Phi_l(w))
// and the closed product form
//   1 - prod_l B_{a_l}(z) prod_l conj(B_{a_{n-l+1}}(w)),
// returning the closed form (the sum form when z = w exactly).
Quaternion dirichlet_kernel(const MTSystem& sys, const Quaternion& z,
                            const Quaternion& w);

// |P_n f(a_l) - f(a_l)| for each pole a_l. The projection interpolates the
// slice restriction of f at the poles, so these vanish up to discretization.
std::vector<double> interpolation_residuals(const RegularSeries& f,
                                            const MTSystem& sys);

// ||f - P_n f|| for n = 1..n_max; non-increasing since the spans are nested.
std::vector<std::pair<int, double>> convergence_table(const RegularSeries& f,
                                                      const PoleSequence& poles,
                                                      int n_max, int degree);

}  // namespace quatmt
