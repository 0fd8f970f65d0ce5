#pragma once

#include <array>

#include "s4cover/projective.hpp"
#include "s4cover/quaternion.hpp"
#include "s4cover/rng.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

// Uniform samplers. Gaussian tuples are radially normalized, which gives the
// rotation-invariant measure; projective samples are additionally
// canonicalized. Every sampler is deterministic in the (seed, index) pair of
// the supplied substream.

inline Complex gaussian_complex(SubstreamRng& rng) {
  return {rng.gaussian(), rng.gaussian()};
}

template <std::size_t N>
SpherePoint<N> random_sphere(SubstreamRng& rng) {
  std::array<double, N + 1> v;
  for (;;) {
    double nsq = 0.0;
    for (auto& x : v) {
      x = rng.gaussian();
      nsq += x * x;
    }
    if (nsq > 1e-24) return SpherePoint<N>(v);
  }
}

template <std::size_t N>
CplxProj<N> random_cproj(SubstreamRng& rng) {
  std::array<Complex, N + 1> v;
  for (;;) {
    double nsq = 0.0;
    for (auto& x : v) {
      x = gaussian_complex(rng);
      nsq += std::norm(x);
    }
    if (nsq > 1e-24) return CplxProj<N>(v).canonical();
  }
}

template <std::size_t N>
RealProj<N> random_rproj(SubstreamRng& rng) {
  std::array<double, N + 1> v;
  for (;;) {
    double nsq = 0.0;
    for (auto& x : v) {
      x = rng.gaussian();
      nsq += x * x;
    }
    if (nsq > 1e-24) return RealProj<N>(v).canonical();
  }
}

inline PairS2 random_pair_s2(SubstreamRng& rng) {
  return {random_sphere<2>(rng), random_sphere<2>(rng)};
}

inline Quaternion random_unit_quaternion(SubstreamRng& rng) {
  for (;;) {
    Quaternion q{rng.gaussian(), rng.gaussian(), rng.gaussian(),
                 rng.gaussian()};
    if (q.norm_sq() > 1e-24) return q.normalized();
  }
}

/// Uniform point of S⁵ viewed as a unit vector of C³.
inline std::array<Complex, 3> random_unit_c3(SubstreamRng& rng) {
  for (;;) {
    std::array<Complex, 3> v{gaussian_complex(rng), gaussian_complex(rng),
                             gaussian_complex(rng)};
    double nsq = 0.0;
    for (const auto& x : v) nsq += std::norm(x);
    if (nsq > 1e-24) {
      const double n = std::sqrt(nsq);
      for (auto& x : v) x /= n;
      return v;
    }
  }
}

/// Pair (s, s') with s•s' = x: s is uniform and s' is drawn uniformly on the
/// circle of points at angle arccos(x) from s.
inline PairS2 sample_c_level(double x, SubstreamRng& rng) {
  const S2Point s = random_sphere<2>(rng);
  std::array<double, 3> u;
  for (;;) {
    const S2Point r = random_sphere<2>(rng);
    const double d = dot(r, s);
    double nsq = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      u[i] = r[i] - d * s[i];
      nsq += u[i] * u[i];
    }
    if (nsq > 1e-12) {
      const double n = std::sqrt(nsq);
      for (auto& c : u) c /= n;
      break;
    }
  }
  const double sn = std::sqrt(std::max(0.0, 1.0 - x * x));
  std::array<double, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = x * s[i] + sn * u[i];
  return {s, S2Point(v)};
}

}  // namespace s4cover
