#include "quatmt/projection.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "quatmt/numeric.hpp"

namespace quatmt {

namespace {

constexpr double pi = std::numbers::pi;

const UnitImaginary& require_common_slice(const MTSystem& sys) {
  if (!sys.poles.common_slice()) {
    throw std::domain_error("projection: system has no common slice");
  }
  return *sys.poles.common_slice();
}

RegularSeries assemble_approximant(const MTSystem& sys,
                                   const std::vector<Quaternion>& coeffs) {
  RegularSeries approx = RegularSeries::zero(std::max(sys.truncation_degree, 0));
  for (int k = 0; k < sys.size(); ++k) {
    approx = approx + right_scaled(sys.basis[static_cast<std::size_t>(k)],
                                   coeffs[static_cast<std::size_t>(k)]);
  }
  return approx;
}

}  // namespace

std::vector<Quaternion> mt_coefficients(const RegularSeries& f,
                                        const MTSystem& sys) {
  require_common_slice(sys);
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(sys.size()));
  for (int k = 0; k < sys.size(); ++k) {
    coeffs[static_cast<std::size_t>(k)] =
        h2_inner_coeff(f, sys.basis[static_cast<std::size_t>(k)]);
  }
  return coeffs;
}

std::vector<Quaternion> mt_coefficients(const SliceBoundaryGrid& f,
                                        const MTSystem& sys) {
  const UnitImaginary& I = require_common_slice(sys);
  if (std::abs(f.direction().x() - I.x()) + std::abs(f.direction().y() - I.y()) +
          std::abs(f.direction().z() - I.z()) >
      1e-12) {
    throw std::domain_error("mt_coefficients: grid direction differs from the system slice");
  }
  const UnitImaginary J = orthogonal_unit(I);
  const Quaternion iq = I.as_quaternion();
  const Quaternion jq = J.as_quaternion();
  const Quaternion kq = iq * jq;

  const int m = f.size();
  std::vector<std::complex<double>> f_part(static_cast<std::size_t>(m));
  std::vector<std::complex<double>> g_part(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const Quaternion& v = f.values()[static_cast<std::size_t>(t)];
    f_part[static_cast<std::size_t>(t)] = {
        v.w, v.x * iq.x + v.y * iq.y + v.z * iq.z};
    g_part[static_cast<std::size_t>(t)] = {
        v.x * jq.x + v.y * jq.y + v.z * jq.z,
        v.x * kq.x + v.y * kq.y + v.z * kq.z};
  }

  std::vector<Quaternion> coeffs(static_cast<std::size_t>(sys.size()));
  std::vector<std::complex<double>> tf(static_cast<std::size_t>(m));
  std::vector<std::complex<double>> tg(static_cast<std::size_t>(m));
  for (int k = 1; k <= sys.size(); ++k) {
    const std::vector<std::complex<double>> phi = mt_boundary_samples(sys, k, m);
    for (int t = 0; t < m; ++t) {
      const std::complex<double> phi_conj = std::conj(phi[static_cast<std::size_t>(t)]);
      tf[static_cast<std::size_t>(t)] = phi_conj * f_part[static_cast<std::size_t>(t)];
      tg[static_cast<std::size_t>(t)] = phi_conj * g_part[static_cast<std::size_t>(t)];
    }
    const std::complex<double> cf =
        pairwise_sum(std::span<const std::complex<double>>(tf)) / static_cast<double>(m);
    const std::complex<double> cg =
        pairwise_sum(std::span<const std::complex<double>>(tg)) / static_cast<double>(m);
    coeffs[static_cast<std::size_t>(k - 1)] =
        embed_in_slice(cf, I) + embed_in_slice(cg, I) * jq;
  }
  return coeffs;
}

ProjectionResult project(const RegularSeries& f, const MTSystem& sys) {
  ProjectionResult result;
  result.coefficients = mt_coefficients(f, sys);
  result.approximant = assemble_approximant(sys, result.coefficients);
  result.residual_norm = h2_norm(f - result.approximant);
  return result;
}

ProjectionResult project(const SliceBoundaryGrid& f, const MTSystem& sys) {
  ProjectionResult result;
  result.coefficients = mt_coefficients(f, sys);
  result.approximant = assemble_approximant(sys, result.coefficients);
  double captured = 0.0;
  for (const Quaternion& c : result.coefficients) captured += c.norm_sq();
  const double total = inner_product_quadrature(f, f).re();
  result.residual_norm = std::sqrt(std::max(0.0, total - captured));
  return result;
}

Quaternion dirichlet_kernel(const MTSystem& sys, const Quaternion& z,
                            const Quaternion& w) {
  const UnitImaginary& I = require_common_slice(sys);
  if (slice_residual(z, I) > 1e-12 || slice_residual(w, I) > 1e-12) {
    throw std::domain_error("dirichlet_kernel: arguments must lie on the common slice");
  }
  const std::complex<double> zc = slice_components(z, I);
  const std::complex<double> wc = slice_components(w, I);
  const int n = sys.size();

  std::vector<std::complex<double>> poles;
  poles.reserve(static_cast<std::size_t>(sys.poles.size()));
  for (const Quaternion& a : sys.poles.params()) {
    poles.push_back(slice_components(a, I));
  }

  std::complex<double> sum_form = 0.0;
  for (int l = 1; l <= n; ++l) {
    sum_form += mt_eval_complex(sys, l, zc) * (1.0 - zc * std::conj(wc)) *
                std::conj(mt_eval_complex(sys, l, wc));
  }

  std::complex<double> prod_z = 1.0;
  std::complex<double> prod_w = 1.0;
  for (int l = 1; l <= n; ++l) {
    prod_z *= complex_blaschke(poles[static_cast<std::size_t>(l - 1)], zc);
    prod_w *= std::conj(complex_blaschke(poles[static_cast<std::size_t>(n - l)], wc));
  }
  const std::complex<double> closed_form = 1.0 - prod_z * prod_w;

  const bool same_point = z.w == w.w && z.x == w.x && z.y == w.y && z.z == w.z;
  return embed_in_slice(same_point ? sum_form : closed_form, I);
}

std::vector<double> interpolation_residuals(const RegularSeries& f,
                                            const MTSystem& sys) {
  const ProjectionResult pr = project(f, sys);
  std::vector<double> residuals;
  residuals.reserve(static_cast<std::size_t>(sys.size()));
  for (int l = 0; l < sys.size(); ++l) {
    const Quaternion& a = sys.poles.params()[static_cast<std::size_t>(l)];
    residuals.push_back(distance(eval(pr.approximant, a), eval(f, a)));
  }
  return residuals;
}

std::vector<std::pair<int, double>> convergence_table(const RegularSeries& f,
                                                      const PoleSequence& poles,
                                                      int n_max, int degree) {
  if (n_max < 1 || n_max > poles.size()) {
    throw std::invalid_argument("convergence_table: need n_max in [1, number of poles]");
  }
  const MTSystem sys = build_mt(poles, n_max, degree);
  const std::vector<Quaternion> coeffs = mt_coefficients(f, sys);

  std::vector<std::pair<int, double>> table;
  table.reserve(static_cast<std::size_t>(n_max));
  RegularSeries approx = RegularSeries::zero(degree);
  for (int n = 1; n <= n_max; ++n) {
    approx = approx + right_scaled(sys.basis[static_cast<std::size_t>(n - 1)],
                                   coeffs[static_cast<std::size_t>(n - 1)]);
    table.emplace_back(n, h2_norm(f - approx));
  }
  return table;
}

}  // namespace quatmt
