#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "s4cover/errors.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

/// Point of complex projective n-space in homogeneous coordinates: a nonzero
/// (n+1)-tuple modulo complex scale. Equality is the scale-invariant chordal
/// metric (proj_eq); the canonical representative exists for export/hashing
/// and is tolerance-sensitive near pivot-modulus ties.
template <std::size_t N>
class CplxProj {
 public:
  static constexpr std::size_t kCoords = N + 1;
  using Coords = std::array<Complex, kCoords>;

  explicit CplxProj(const Coords& c) : c_(c) {
    if (norm_of(c) < 1e-300)
      throw ZeroVector("CplxProj: homogeneous coordinates must not all vanish");
  }

  const Coords& coords() const { return c_; }

  double norm() const { return norm_of(c_); }

  /// Unit norm, with the first coordinate of largest modulus made real and
  /// nonnegative (largest-modulus pivot for stability near coordinate zeros).
  CplxProj canonical() const {
    std::size_t pivot = 0;
    double best = std::abs(c_[0]);
    for (std::size_t i = 1; i < kCoords; ++i) {
      const double m = std::abs(c_[i]);
      if (m > best) {
        best = m;
        pivot = i;
      }
    }
    const double n = norm_of(c_);
    const Complex scale = std::conj(c_[pivot]) / (best * n);
    Coords out;
    for (std::size_t i = 0; i < kCoords; ++i) out[i] = c_[i] * scale;
    out[pivot] = Complex{std::abs(out[pivot]), 0.0};
    return CplxProj(out);
  }

 private:
  static double norm_of(const Coords& c) {
    double s = 0.0;
    for (const Complex& x : c) s += std::norm(x);
    return std::sqrt(s);
  }

  Coords c_;
};

/// Point of real projective n-space: nonzero real (n+1)-tuple modulo real
/// scale.
template <std::size_t N>
class RealProj {
 public:
  static constexpr std::size_t kCoords = N + 1;
  using Coords = std::array<double, kCoords>;

  explicit RealProj(const Coords& c) : c_(c) {
    if (norm_of(c) < 1e-300)
      throw ZeroVector("RealProj: homogeneous coordinates must not all vanish");
  }

  const Coords& coords() const { return c_; }

  double norm() const { return norm_of(c_); }

  /// Unit norm with the largest-modulus pivot coordinate positive.
  RealProj canonical() const {
    std::size_t pivot = 0;
    double best = std::abs(c_[0]);
    for (std::size_t i = 1; i < kCoords; ++i) {
      const double m = std::abs(c_[i]);
      if (m > best) {
        best = m;
        pivot = i;
      }
    }
    const double scale = (c_[pivot] < 0.0 ? -1.0 : 1.0) / norm_of(c_);
    Coords out;
    for (std::size_t i = 0; i < kCoords; ++i) out[i] = c_[i] * scale;
    return RealProj(out);
  }

 private:
  static double norm_of(const Coords& c) {
    double s = 0.0;
    for (double x : c) s += x * x;
    return std::sqrt(s);
  }

  Coords c_;
};

// Chordal distance sqrt(1 - |<p,q>|^2) between unit representatives. It is
// evaluated as the norm of the projection residual p - q<q,p>, which keeps
// full precision for nearby points where the textbook expression loses half
// the significant digits to cancellation.
template <std::size_t N>
double chordal_distance(const CplxProj<N>& p, const CplxProj<N>& q) {
  const double np = p.norm(), nq = q.norm();
  std::array<Complex, N + 1> ph, qh;
  for (std::size_t i = 0; i <= N; ++i) {
    ph[i] = p.coords()[i] / np;
    qh[i] = q.coords()[i] / nq;
  }
  Complex ip{0.0, 0.0};
  for (std::size_t i = 0; i <= N; ++i) ip += std::conj(qh[i]) * ph[i];
  double s = 0.0;
  for (std::size_t i = 0; i <= N; ++i) s += std::norm(ph[i] - ip * qh[i]);
  return std::sqrt(s);
}

template <std::size_t N>
double chordal_distance(const RealProj<N>& p, const RealProj<N>& q) {
  const double np = p.norm(), nq = q.norm();
  std::array<double, N + 1> ph, qh;
  for (std::size_t i = 0; i <= N; ++i) {
    ph[i] = p.coords()[i] / np;
    qh[i] = q.coords()[i] / nq;
  }
  double ip = 0.0;
  for (std::size_t i = 0; i <= N; ++i) ip += qh[i] * ph[i];
  double s = 0.0;
  for (std::size_t i = 0; i <= N; ++i) {
    const double r = ph[i] - ip * qh[i];
    s += r * r;
  }
  return std::sqrt(s);
}

template <std::size_t N>
bool proj_eq(const CplxProj<N>& p, const CplxProj<N>& q, double tol) {
  return chordal_distance(p, q) <= tol;
}

template <std::size_t N>
bool proj_eq(const RealProj<N>& p, const RealProj<N>& q, double tol) {
  return chordal_distance(p, q) <= tol;
}

inline CplxProj<1> cp1(Complex u, Complex v) { return CplxProj<1>({u, v}); }

inline CplxProj<2> cp2(Complex z0, Complex z1, Complex z2) {
  return CplxProj<2>({z0, z1, z2});
}

inline RealProj<2> rp2(double r, double s, double t) {
  return RealProj<2>({r, s, t});
}

inline RealProj<4> rp4(double a, double b, double c, double d, double e) {
  return RealProj<4>({a, b, c, d, e});
}

}  // namespace s4cover
