#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace quatmt {

// Element of Hamilton's quaternion algebra; components along 1, i, j, k.
// Multiplication follows ij = -ji = k and is not commutative.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(double real) : w(real) {}  // reals embed in H

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double re() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w;
    x += r.x;
    y += r.y;
    z += r.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w;
    x -= r.x;
    y -= r.y;
    z -= r.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    w /= s;
    x /= s;
    y /= s;
    z /= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
  a += b;
  return a;
}

constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
  a -= b;
  return a;
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(Quaternion a, double s) {
  a *= s;
  return a;
}

constexpr Quaternion operator*(double s, Quaternion a) {
  a *= s;
  return a;
}

constexpr Quaternion operator/(Quaternion a, double s) {
  a /= s;
  return a;
}

// conj(q) / |q|^2; the zero quaternion has no inverse.
Quaternion inverse(const Quaternion& q);

// Comparison helper: absolute tolerance with a relative fallback once the
// operands leave the unit ball.
inline bool nearly_equal(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double distance(const Quaternion& a, const Quaternion& b) {
  return (a - b).norm();
}

inline bool nearly_equal(const Quaternion& a, const Quaternion& b,
                         double tol = 1e-12) {
  return distance(a, b) <= tol * std::max({1.0, a.norm(), b.norm()});
}

// Purely imaginary unit quaternion; as a quaternion it squares to -1.
// Each such direction selects the slice plane R + R*I inside H.
class UnitImaginary {
 public:
  UnitImaginary() = default;  // defaults to i
  UnitImaginary(double x, double y, double z);

  static UnitImaginary i() { return {}; }
  static UnitImaginary j();
  static UnitImaginary k();

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  constexpr Quaternion as_quaternion() const { return {0.0, x_, y_, z_}; }

  double dot(const UnitImaginary& other) const {
    return x_ * other.x_ + y_ * other.y_ + z_ * other.z_;
  }

 private:
  double x_ = 1.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

// Decomposition q = x + y * direction with y >= 0.
struct SliceCoordinate {
  double x = 0.0;
  double y = 0.0;
  UnitImaginary direction;

  Quaternion reassemble() const {
    return Quaternion(x) + y * direction.as_quaternion();
  }
};

// cos(theta) + I sin(theta), the unit-norm exponential along the slice of I.
Quaternion exp_slice(double theta, const UnitImaginary& I);

// cos(t2) i + sin(t2)cos(t3) j + sin(t2)sin(t3) k.
UnitImaginary unit_from_spherical(double theta2, double theta3);

// Writes q = x + y*I with y >= 0. A real q has no preferred direction, so the
// caller-supplied fallback is recorded instead.
SliceCoordinate slice_decompose(const Quaternion& q,
                                const UnitImaginary& fallback);

// Deterministic unit direction orthogonal to I: the first of i, j, k that is
// not nearly parallel to I (|dot| < 0.9), projected onto the orthogonal
// complement of I and normalized.
UnitImaginary orthogonal_unit(const UnitImaginary& I);

// q v conj(q) for unit q; rotates the imaginary 3-space around the axis of q.
Quaternion rotate(const Quaternion& q, const Quaternion& v);

// Normalized Haar average of f over the unit 3-sphere, midpoint rule on the
// spherical parametrization (theta1, theta2 in [0,pi], theta3 in [0,2pi))
// with weight sin^2(theta1) sin(theta2). The weight sum on the same grid is
// used as the normalizer, so constants average to exactly 1.
double haar_integral(const std::function<double(const Quaternion&)>& f, int n1,
                     int n2, int n3);

// Complex coordinates of q relative to the slice of I: (Re q, <Im q, I>).
// Ignores any component of q outside the slice plane.
inline std::complex<double> slice_components(const Quaternion& q,
                                             const UnitImaginary& I) {
  return {q.w, q.x * I.x() + q.y * I.y() + q.z * I.z()};
}

// Distance from q to the slice plane of I.
double slice_residual(const Quaternion& q, const UnitImaginary& I);

// Embeds a complex value u + iv into the slice of I as u + v*I.
inline Quaternion embed_in_slice(std::complex<double> v,
                                 const UnitImaginary& I) {
  return Quaternion(v.real()) + v.imag() * I.as_quaternion();
}

}  // namespace quatmt
