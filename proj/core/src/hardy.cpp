#include "quatmt/hardy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quatmt/numeric.hpp"

namespace quatmt {

namespace {

constexpr double pi = std::numbers::pi;

void require_matching(const SliceBoundaryGrid& f, const SliceBoundaryGrid& g) {
  if (f.size() != g.size()) {
    throw std::domain_error("boundary grids differ in node count");
  }
  const double dx = f.direction().x() - g.direction().x();
  const double dy = f.direction().y() - g.direction().y();
  const double dz = f.direction().z() - g.direction().z();
  if (std::sqrt(dx * dx + dy * dy + dz * dz) > 1e-12) {
    throw std::domain_error("boundary grids differ in slice direction");
  }
}

}  // namespace

SliceBoundaryGrid::SliceBoundaryGrid(const UnitImaginary& direction,
                                     std::vector<Quaternion> values)
    : direction_(direction), values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("SliceBoundaryGrid: need at least 2 samples");
  }
}

SliceBoundaryGrid SliceBoundaryGrid::sample(
    const std::function<Quaternion(const Quaternion&)>& f,
    const UnitImaginary& direction, int nodes) {
  if (nodes < 2) {
    throw std::invalid_argument("SliceBoundaryGrid: need at least 2 samples");
  }
  std::vector<Quaternion> values(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) {
    values[static_cast<std::size_t>(m)] =
        f(exp_slice(2.0 * pi * m / nodes, direction));
  }
  return {direction, std::move(values)};
}

SliceBoundaryGrid SliceBoundaryGrid::sample_series(const RegularSeries& f,
                                                   const UnitImaginary& direction,
                                                   int nodes, double radius) {
  if (radius <= 0.0 || radius > 1.0) {
    throw std::invalid_argument("sample_series: radius must lie in (0, 1]");
  }
  return sample([&f, radius](const Quaternion& q) { return eval(f, q * radius); },
                direction, nodes);
}

double SliceBoundaryGrid::theta(int m) const { return 2.0 * pi * m / size(); }

Quaternion SliceBoundaryGrid::node(int m) const {
  return exp_slice(theta(m), direction_);
}

Quaternion inner_product_quadrature(const SliceBoundaryGrid& f,
                                    const SliceBoundaryGrid& g) {
  require_matching(f, g);
  const int m = f.size();
  std::vector<Quaternion> terms(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    terms[static_cast<std::size_t>(t)] =
        g.values()[static_cast<std::size_t>(t)].conj() *
        f.values()[static_cast<std::size_t>(t)];
  }
  return pairwise_sum(std::span<const Quaternion>(terms)) / static_cast<double>(m);
}

Quaternion poisson_eval(const SliceBoundaryGrid& boundary, double r,
                        double theta) {
  if (r < 0.0 || r >= 1.0) {
    throw std::domain_error("poisson_eval: requires 0 <= r < 1");
  }
  const int m = boundary.size();
  const double r2 = r * r;
  std::vector<Quaternion> terms(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const double kernel =
        (1.0 - r2) / (1.0 - 2.0 * r * std::cos(theta - boundary.theta(t)) + r2);
    terms[static_cast<std::size_t>(t)] =
        kernel * boundary.values()[static_cast<std::size_t>(t)];
  }
  return pairwise_sum(std::span<const Quaternion>(terms)) / static_cast<double>(m);
}

Quaternion cauchy_slice_eval(const SliceBoundaryGrid& boundary,
                             const Quaternion& z) {
  const UnitImaginary& I = boundary.direction();
  if (slice_residual(z, I) > 1e-12) {
    throw std::domain_error("cauchy_slice_eval: point is off the slice");
  }
  if (z.norm() >= 1.0) {
    throw std::domain_error("cauchy_slice_eval: point outside the open disc");
  }
  const Quaternion iq = I.as_quaternion();
  const int m = boundary.size();
  // xi = exp(I t), d(xi) = I xi dt; the left prefactor is 1/(2 pi I).
  std::vector<Quaternion> terms(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const Quaternion xi = boundary.node(t);
    terms[static_cast<std::size_t>(t)] =
        iq * xi * inverse(xi - z) * boundary.values()[static_cast<std::size_t>(t)];
  }
  const Quaternion integral =
      pairwise_sum(std::span<const Quaternion>(terms)) * (2.0 * pi / m);
  return inverse(2.0 * pi * iq) * integral;
}

Quaternion cauchy_kernel(const Quaternion& s, const Quaternion& q) {
  const Quaternion denom = q * q - (2.0 * s.re()) * q + Quaternion(s.norm_sq());
  if (denom.norm() < 1e-12) {
    throw std::domain_error("cauchy_kernel: singular on the sphere through s");
  }
  return inverse(denom) * (s.conj() - q);
}

Quaternion regular_cauchy_eval(const SliceBoundaryGrid& boundary,
                               const Quaternion& q) {
  if (q.norm() >= 1.0 - 1e-9) {
    throw std::domain_error("regular_cauchy_eval: point too close to the boundary");
  }
  const int m = boundary.size();
  // ds_I = -I ds collapses to exp(I t) dt on the circle.
  std::vector<Quaternion> terms(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const Quaternion s = boundary.node(t);
    terms[static_cast<std::size_t>(t)] =
        cauchy_kernel(s, q) * s * boundary.values()[static_cast<std::size_t>(t)];
  }
  return pairwise_sum(std::span<const Quaternion>(terms)) / static_cast<double>(m);
}

Quaternion extend_from_slice(
    const std::function<Quaternion(const Quaternion&)>& F_I,
    const UnitImaginary& I, const Quaternion& q) {
  const SliceCoordinate sc = slice_decompose(q, I);
  const Quaternion iq = I.as_quaternion();
  const Quaternion plus = F_I(Quaternion(sc.x) + sc.y * iq);
  const Quaternion minus = F_I(Quaternion(sc.x) - sc.y * iq);
  const Quaternion jq = sc.direction.as_quaternion();
  return 0.5 * (plus + minus) + (jq * iq) * (0.5 * (minus - plus));
}

}  // namespace quatmt
