#pragma once

#include <array>
#include <cmath>

#include "s4cover/errors.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

/// Quaternion w + xi + yj + zk. Unit quaternions form S³; purely imaginary
/// unit quaternions are identified with S² via (x, y, z).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  // Hamilton product (non-commutative).
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }

  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  Quaternion normalized() const {
    const double n = norm();
    if (!(n >= 1e-300)) throw ZeroVector("Quaternion: cannot normalize zero");
    return {w / n, x / n, y / n, z / n};
  }

  Quaternion inverse() const {
    const double n2 = norm_sq();
    if (!(n2 >= 1e-300)) throw ZeroVector("Quaternion: zero has no inverse");
    const Quaternion c = conjugate();
    return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
  }

  friend Quaternion operator-(const Quaternion& q) {
    return {-q.w, -q.x, -q.y, -q.z};
  }

  /// Imaginary part as a point of R³ (i, j, k components).
  std::array<double, 3> imag() const { return {x, y, z}; }

  static Quaternion from_imag(const std::array<double, 3>& v) {
    return {0.0, v[0], v[1], v[2]};
  }
};

inline bool is_unit(const Quaternion& q, double tol) {
  return std::abs(q.norm() - 1.0) <= tol;
}

/// Conjugation v -> q v q⁻¹ of a purely imaginary quaternion by a unit
/// quaternion; preserves |v| and stays purely imaginary.
inline Quaternion quat_rotate_im(const Quaternion& q, const Quaternion& v,
                                 double tol = 1e-9) {
  if (!is_unit(q, tol))
    throw NonUnitQuaternion("quat_rotate_im: |q| must be 1");
  return q * v * q.conjugate();
}

}  // namespace s4cover
