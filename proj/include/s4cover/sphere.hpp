#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "s4cover/errors.hpp"

namespace s4cover {

using Complex = std::complex<double>;

/// Point on the unit n-sphere, stored as its n+1 ambient coordinates.
/// Construction renormalizes, so the unit-norm invariant holds to rounding.
template <std::size_t N>
class SpherePoint {
 public:
  static constexpr std::size_t kAmbient = N + 1;
  using Coords = std::array<double, kAmbient>;

  SpherePoint() {
    coords_.fill(0.0);
    coords_.back() = 1.0;
  }

  explicit SpherePoint(const Coords& v) : coords_(normalized(v)) {}

  /// Wraps coordinates that are already unit length (e.g. a negated unit
  /// vector), skipping the renormalization divide.
  static SpherePoint trusted_unit(const Coords& v) {
    SpherePoint p;
    p.coords_ = v;
    return p;
  }

  const Coords& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  // S² viewed as the unit sphere in C×R: coords are (Re z, Im z, t).
  Complex z() const requires(N == 2) { return {coords_[0], coords_[1]}; }
  double t() const requires(N == 2) { return coords_[2]; }

  static SpherePoint from_zt(Complex z, double t) requires(N == 2) {
    return SpherePoint{{z.real(), z.imag(), t}};
  }

 private:
  static Coords normalized(const Coords& v) {
    double nsq = 0.0;
    for (double x : v) nsq += x * x;
    const double n = std::sqrt(nsq);
    if (!(n >= 1e-300))
      throw ZeroVector("SpherePoint: cannot normalize a (near-)zero vector");
    Coords out;
    for (std::size_t i = 0; i < kAmbient; ++i) out[i] = v[i] / n;
    return out;
  }

  Coords coords_;
};

using S2Point = SpherePoint<2>;
using S4Point = SpherePoint<4>;
using S5Point = SpherePoint<5>;

/// Radial normalization v -> v/|v| onto the unit sphere.
template <std::size_t K>
SpherePoint<K - 1> radial_normalize(const std::array<double, K>& v) {
  static_assert(K >= 2);
  return SpherePoint<K - 1>(v);
}

template <std::size_t N>
double dot(const SpherePoint<N>& a, const SpherePoint<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i <= N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
double sphere_distance(const SpherePoint<N>& a, const SpherePoint<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i <= N; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

template <std::size_t N>
bool sphere_eq(const SpherePoint<N>& a, const SpherePoint<N>& b, double tol) {
  return sphere_distance(a, b) <= tol;
}

/// The antipodal involution: negate every coordinate.
template <std::size_t N>
SpherePoint<N> antipodal(const SpherePoint<N>& p) {
  typename SpherePoint<N>::Coords c;
  for (std::size_t i = 0; i <= N; ++i) c[i] = -p[i];
  return SpherePoint<N>::trusted_unit(c);
}

/// Ordered pair of points on S², the common domain of the dihedral action
/// and of every quotient map in the atlas.
struct PairS2 {
  S2Point first;
  S2Point second;
};

inline double pair_distance(const PairS2& a, const PairS2& b) {
  const double d1 = sphere_distance(a.first, b.first);
  const double d2 = sphere_distance(a.second, b.second);
  return std::sqrt(d1 * d1 + d2 * d2);
}

inline bool pair_eq(const PairS2& a, const PairS2& b, double tol) {
  return pair_distance(a, b) <= tol;
}

/// Inner product of the two legs; 1 on the diagonal, -1 on the graph of the
/// antipodal map.
inline double pair_dot(const PairS2& p) { return dot(p.first, p.second); }

}  // namespace s4cover
