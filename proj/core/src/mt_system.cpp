#include "quatmt/mt_system.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quatmt/numeric.hpp"

namespace quatmt {

namespace {

RegularSeries star_power(const RegularSeries& f, int exponent, int degree) {
  RegularSeries acc = RegularSeries::constant(1.0);
  for (int e = 0; e < exponent; ++e) {
    acc = star_product(acc, f).truncated(degree);
  }
  return acc;
}

// Complex coordinates of the poles relative to the common slice.
std::vector<std::complex<double>> poles_on_slice(const PoleSequence& poles) {
  const UnitImaginary& I = *poles.common_slice();
  std::vector<std::complex<double>> out;
  out.reserve(poles.params().size());
  for (const Quaternion& a : poles.params()) {
    out.push_back(slice_components(a, I));
  }
  return out;
}

std::complex<double> eval_complex_impl(
    const std::vector<std::complex<double>>& poles, int k,
    std::complex<double> z) {
  const std::complex<double> ak = poles[static_cast<std::size_t>(k - 1)];
  std::complex<double> acc = std::sqrt(1.0 - std::norm(ak));
  for (int j = 0; j < k - 1; ++j) {
    acc *= complex_blaschke(poles[static_cast<std::size_t>(j)], z);
  }
  return acc / (1.0 - z * std::conj(ak));
}

const UnitImaginary& require_slice(const MTSystem& sys, const char* who) {
  if (!sys.poles.common_slice()) {
    throw std::domain_error(std::string(who) + ": system has no common slice");
  }
  return *sys.poles.common_slice();
}

void require_index(const MTSystem& sys, int k, const char* who) {
  if (k < 1 || k > sys.size()) {
    throw std::invalid_argument(std::string(who) + ": index out of range");
  }
}

}  // namespace

PoleSequence::PoleSequence(std::vector<Quaternion> params,
                           std::optional<UnitImaginary> common_slice)
    : params_(std::move(params)), common_slice_(common_slice) {
  for (const Quaternion& a : params_) {
    if (a.norm() >= 1.0) {
      throw std::domain_error("PoleSequence: parameters must satisfy |a| < 1");
    }
    if (common_slice_ && slice_residual(a, *common_slice_) > 1e-12) {
      throw std::domain_error(
          "PoleSequence: parameter lies outside the declared common slice");
    }
  }
}

MTSystem build_mt(const PoleSequence& poles, int n, int degree) {
  if (n < 0 || n > poles.size()) {
    throw std::invalid_argument("build_mt: need n in [0, number of poles]");
  }
  if (degree < 1) {
    throw std::invalid_argument("build_mt: degree must be >= 1");
  }
  MTSystem sys{poles, {}, degree};
  sys.basis.reserve(static_cast<std::size_t>(n));

  RegularSeries running = RegularSeries::constant(1.0);
  for (int k = 1; k <= n; ++k) {
    const Quaternion& ak = poles.params()[static_cast<std::size_t>(k - 1)];
    const RegularSeries reciprocal =
        regular_reciprocal(RegularSeries({1.0, -ak.conj()}), degree);
    const double normalizer = std::sqrt(1.0 - ak.norm_sq());
    sys.basis.push_back(
        scaled(star_product(running, reciprocal).truncated(degree), normalizer));
    if (k < n) {
      running = star_product(running, regular_blaschke_series(BlaschkeParam(ak), degree))
                    .truncated(degree);
    }
  }
  return sys;
}

RegularSeries laguerre_closed_form(const BlaschkeParam& a, int n, int degree) {
  if (n < 0) {
    throw std::invalid_argument("laguerre_closed_form: n must be >= 0");
  }
  const Quaternion& av = a.value();
  const RegularSeries numerator =
      star_power(RegularSeries({-av, 1.0}), n, degree);
  const RegularSeries reciprocal =
      regular_reciprocal(RegularSeries({1.0, -av.conj()}), degree);
  const RegularSeries denominator = star_power(reciprocal, n + 1, degree);
  return scaled(star_product(numerator, denominator).truncated(degree),
                std::sqrt(1.0 - av.norm_sq()));
}

std::complex<double> mt_eval_complex(const MTSystem& sys, int k,
                                     std::complex<double> z) {
  require_slice(sys, "mt_eval_complex");
  require_index(sys, k, "mt_eval_complex");
  return eval_complex_impl(poles_on_slice(sys.poles), k, z);
}

std::vector<std::complex<double>> mt_boundary_samples(const MTSystem& sys,
                                                      int k, int nodes) {
  require_slice(sys, "mt_boundary_samples");
  require_index(sys, k, "mt_boundary_samples");
  if (nodes < 2) {
    throw std::invalid_argument("mt_boundary_samples: need at least 2 nodes");
  }
  const auto poles = poles_on_slice(sys.poles);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(nodes));
  for (int t = 0; t < nodes; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / nodes;
    out[static_cast<std::size_t>(t)] = eval_complex_impl(
        poles, k, std::complex<double>(std::cos(theta), std::sin(theta)));
  }
  return out;
}

Quaternion mt_eval_at_slice_point(const MTSystem& sys, int k,
                                  const Quaternion& z) {
  const UnitImaginary& I = require_slice(sys, "mt_eval_at_slice_point");
  require_index(sys, k, "mt_eval_at_slice_point");
  if (slice_residual(z, I) > 1e-12) {
    throw std::domain_error("mt_eval_at_slice_point: point is off the slice");
  }
  if (z.norm() > 1.0 + 1e-12) {
    throw std::domain_error("mt_eval_at_slice_point: point outside the closed ball");
  }
  return embed_in_slice(mt_eval_complex(sys, k, slice_components(z, I)), I);
}

Quaternion mt_eval_on_slice(const MTSystem& sys, int k, double theta,
                            double radius) {
  const UnitImaginary& I = require_slice(sys, "mt_eval_on_slice");
  return mt_eval_at_slice_point(sys, k, radius * exp_slice(theta, I));
}

QuaternionMatrix gram_matrix(const MTSystem& sys, GramMethod method,
                             int nodes) {
  const int n = sys.size();
  QuaternionMatrix g(n, n);

  if (method == GramMethod::coeff) {
    for (int m = 0; m < n; ++m) {
      for (int c = 0; c < n; ++c) {
        g.at(m, c) = h2_inner_coeff(sys.basis[static_cast<std::size_t>(c)],
                                    sys.basis[static_cast<std::size_t>(m)]);
      }
    }
    return g;
  }

  const UnitImaginary& I = require_slice(sys, "gram_matrix");
  if (nodes < 2) {
    throw std::invalid_argument("gram_matrix: need at least 2 quadrature nodes");
  }

  // Boundary-exact closed-form samples of every basis function.
  std::vector<std::vector<std::complex<double>>> samples(
      static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    samples[static_cast<std::size_t>(k - 1)] = mt_boundary_samples(sys, k, nodes);
  }

  std::vector<std::complex<double>> terms(static_cast<std::size_t>(nodes));
  for (int m = 0; m < n; ++m) {
    for (int c = 0; c < n; ++c) {
      for (int t = 0; t < nodes; ++t) {
        terms[static_cast<std::size_t>(t)] =
            std::conj(samples[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)]) *
            samples[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)];
      }
      const std::complex<double> value =
          pairwise_sum(std::span<const std::complex<double>>(terms)) /
          static_cast<double>(nodes);
      g.at(m, c) = embed_in_slice(value, I);
    }
  }
  return g;
}

double max_deviation_from_identity(const QuaternionMatrix& m) {
  double dev = 0.0;
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      const Quaternion expected = (r == c) ? Quaternion(1.0) : Quaternion();
      dev = std::max(dev, distance(m.at(r, c), expected));
    }
  }
  return dev;
}

Quaternion classical_mt_eval(const PoleSequence& poles, int k,
                             const Quaternion& q) {
  if (k < 1 || k > poles.size()) {
    throw std::invalid_argument("classical_mt_eval: index out of range");
  }
  const Quaternion& ak = poles.params()[static_cast<std::size_t>(k - 1)];
  Quaternion acc(1.0);
  for (int j = 0; j < k - 1; ++j) {
    acc = acc * classical_blaschke(
                    BlaschkeParam(poles.params()[static_cast<std::size_t>(j)]), q);
  }
  acc = acc * inverse(Quaternion(1.0) - q * ak.conj());
  return std::sqrt(1.0 - ak.norm_sq()) * acc;
}

}  // namespace quatmt
