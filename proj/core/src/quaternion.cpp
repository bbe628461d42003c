#include "quatmt/quaternion.hpp"

#include <limits>
#include <numbers>

namespace quatmt {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 < std::numeric_limits<double>::min()) {
    throw std::domain_error("inverse: zero quaternion has no inverse");
  }
  return q.conj() / n2;
}

UnitImaginary::UnitImaginary(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (n < 1e-14) {
    throw std::domain_error("UnitImaginary: direction vector is too small");
  }
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
}

UnitImaginary UnitImaginary::j() { return {0.0, 1.0, 0.0}; }
UnitImaginary UnitImaginary::k() { return {0.0, 0.0, 1.0}; }

Quaternion exp_slice(double theta, const UnitImaginary& I) {
  return Quaternion(std::cos(theta)) + std::sin(theta) * I.as_quaternion();
}

UnitImaginary unit_from_spherical(double theta2, double theta3) {
  return {std::cos(theta2), std::sin(theta2) * std::cos(theta3),
          std::sin(theta2) * std::sin(theta3)};
}

SliceCoordinate slice_decompose(const Quaternion& q,
                                const UnitImaginary& fallback) {
  const double im = q.imag_norm();
  if (im < 1e-14) {
    return {q.w, 0.0, fallback};
  }
  return {q.w, im, UnitImaginary(q.x, q.y, q.z)};
}

UnitImaginary orthogonal_unit(const UnitImaginary& I) {
  const UnitImaginary candidates[] = {UnitImaginary::i(), UnitImaginary::j(),
                                      UnitImaginary::k()};
  for (const UnitImaginary& c : candidates) {
    const double d = c.dot(I);
    if (std::abs(d) < 0.9) {
      return {c.x() - d * I.x(), c.y() - d * I.y(), c.z() - d * I.z()};
    }
  }
  // unreachable: at most one axis can have |dot| >= 0.9 with a unit vector
  throw std::logic_error("orthogonal_unit: no candidate axis usable");
}

Quaternion rotate(const Quaternion& q, const Quaternion& v) {
  if (std::abs(q.norm() - 1.0) > 1e-12) {
    throw std::domain_error("rotate: q must be a unit quaternion");
  }
  return q * v * q.conj();
}

double haar_integral(const std::function<double(const Quaternion&)>& f, int n1,
                     int n2, int n3) {
  if (n1 < 2 || n2 < 2 || n3 < 2) {
    throw std::invalid_argument("haar_integral: need at least 2 nodes per axis");
  }
  constexpr double pi = std::numbers::pi;
  const double h1 = pi / n1;
  const double h2 = pi / n2;
  const double h3 = 2.0 * pi / n3;

  double weighted = 0.0;
  double weight_sum = 0.0;
  for (int i1 = 0; i1 < n1; ++i1) {
    const double theta1 = (i1 + 0.5) * h1;
    const double s1 = std::sin(theta1);
    const double w1 = s1 * s1;
    for (int i2 = 0; i2 < n2; ++i2) {
      const double theta2 = (i2 + 0.5) * h2;
      const double w12 = w1 * std::sin(theta2);
      for (int i3 = 0; i3 < n3; ++i3) {
        const double theta3 = (i3 + 0.5) * h3;
        const Quaternion q = exp_slice(theta1, unit_from_spherical(theta2, theta3));
        weighted += w12 * f(q);
        weight_sum += w12;
      }
    }
  }
  return weighted / weight_sum;
}

double slice_residual(const Quaternion& q, const UnitImaginary& I) {
  const double p = q.x * I.x() + q.y * I.y() + q.z * I.z();
  const double rx = q.x - p * I.x();
  const double ry = q.y - p * I.y();
  const double rz = q.z - p * I.z();
  return std::sqrt(rx * rx + ry * ry + rz * rz);
}

}  // namespace quatmt
