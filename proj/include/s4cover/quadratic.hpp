#pragma once

#include <cmath>
#include <complex>

#include "s4cover/errors.hpp"
#include "s4cover/projective.hpp"

namespace s4cover {

struct HomogQuadRoots {
  CplxProj<1> first;
  CplxProj<1> second;
  Complex discriminant;  // B² - 4AC
  bool double_root;      // relative-threshold classification
};

/// Roots [X:Y] of the homogeneous quadratic C·X² − B·X·Y + A·Y², with
/// multiplicity: [1:0] is a root when C = 0 and a double root when C = B = 0.
///
/// The larger-magnitude root is computed from the sign of √disc that avoids
/// cancellation against B; the other root comes from Vieta, so both stay
/// accurate when the roots differ wildly in magnitude. A double root is
/// declared when |disc| ≤ eq_tol·(|B|² + |4AC| + 1); in that case the two
/// returned roots are the same class, never two nearby classes.
inline HomogQuadRoots solve_homog_quadratic(Complex a, Complex b, Complex c,
                                            double eq_tol = 1e-9) {
  const double ma = std::abs(a), mb = std::abs(b), mc = std::abs(c);
  if (ma < 1e-300 && mb < 1e-300 && mc < 1e-300)
    throw AllZero("solve_homog_quadratic: all three coefficients vanish");

  const Complex disc = b * b - 4.0 * a * c;
  const bool dbl =
      std::abs(disc) <= eq_tol * (mb * mb + 4.0 * ma * mc + 1.0);
  if (dbl) {
    // The Vieta midpoint is the multiplicity-2 class; a root that still
    // carries the sqrt(disc) perturbation would split the double root by
    // O(sqrt(disc)). The two equal forms [B : 2C] and [2A : B] are chosen by
    // the larger of |A|, |C|, which stays well conditioned when the double
    // root sits near 0 or near infinity.
    if (mb == 0.0 && (ma == 0.0 || mc == 0.0)) {
      const CplxProj<1> mid = mc == 0.0 ? cp1(1.0, 0.0) : cp1(0.0, 1.0);
      return {mid, mid, disc, true};
    }
    const CplxProj<1> mid = ma >= mc ? cp1(2.0 * a, b) : cp1(b, 2.0 * c);
    return {mid, mid, disc, true};
  }

  if (mc == 0.0) {
    // Y·(A·Y − B·X): one root at infinity, one affine.
    return {cp1(1.0, 0.0), cp1(a, b), disc, false};
  }
  if (ma == 0.0) {
    // X·(C·X − B·Y): the origin and B/C.
    return {cp1(0.0, 1.0), cp1(b, c), disc, false};
  }

  Complex s = std::sqrt(disc);
  if ((std::conj(b) * s).real() < 0.0) s = -s;
  const Complex q = (b + s) / 2.0;  // nonzero: |b+s| >= |b-s| and a,c != 0
  return {cp1(q, c), cp1(a, q), disc, false};
}

}  // namespace s4cover
