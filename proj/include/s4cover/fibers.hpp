#pragma once

#include <utility>
#include <vector>

#include "s4cover/maps.hpp"
#include "s4cover/projective.hpp"
#include "s4cover/quadratic.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

// Closed-form fiber solvers. Each map in the tower restricts on a chart to
// the symmetric-function map (x, y) -> (xy, x+y), so a fiber is the root
// pair of one homogeneous quadratic; what differs per map is how a root
// class [X:Y] is decoded back into the domain.

/// Fiber of f_hat over [z0:z1:z2]: the unordered root pair of
/// z2·X² − z1·XY + z0·Y². on_branch is the double-root classification, which
/// coincides with membership of the target in the conic z1² = 4·z0·z2; a
/// double root is returned as one class twice (multiplicity 2).
struct FhatFiber {
  CplxProj<1> first;
  CplxProj<1> second;
  Complex discriminant;
  bool on_branch;
};

FhatFiber fiber_fhat(const CplxProj<2>& target, double eq_tol = 1e-9);

/// Fiber of lambda: gamma_inv of both f_hat roots. The two ordered pairs in
/// the fiber are tau-related, so one PairS2 represents the fiber.
struct LambdaFiber {
  PairS2 pair;
  bool on_branch;
};

LambdaFiber fiber_lambda(const CplxProj<2>& target, double eq_tol = 1e-9);

/// Fiber of g over [p1:...:p5]: complexifies the target as
/// (P, Q, T) = (p1+ip2, p3+ip4, p5), solves T·X² − Q·XY + P·Y², and phase-
/// adjusts each root so its Y coordinate is real, giving [Re X : Im X : Y].
/// Throws DegenerateFiber when no phase adjustment makes both roots
/// real-representable (a measure-zero set with T = 0).
std::pair<RealProj<2>, RealProj<2>> fiber_g_real(const RealProj<4>& target,
                                                 double eq_tol = 1e-9);

/// Fiber of g~ over a point of S⁴ with the C²×R unpacking (Z1, Z2, T):
/// the roots of T·X² − Z2·XY + Z1·Y² are the classes [z : t] of the two
/// legs; each is phase-fixed to real t, the sign ambiguity is resolved by a
/// forward g~ check, and the generic result is one <s2,t>-orbit of size 4.
/// Throws DegenerateFiber when |T| <= 1e-6 (equatorial phase loss).
struct GTildeFiber {
  std::vector<PairS2> pairs;
  bool on_branch;  // double root: the 4-to-1 count degenerates
};

GTildeFiber fiber_g_tilde(const S4Point& target, double eq_tol = 1e-9);

/// Fiber of G: the lambda-images of the g~ fiber, deduplicated. Generic size
/// is 2, and the two classes are exchanged by theta∘c2∘theta⁻¹. on_branch is
/// set when the classes collapse to one (target on the branch set of G).
struct BigGFiber {
  std::vector<CplxProj<2>> points;
  bool on_branch;
};

BigGFiber fiber_big_g(const S4Point& target, double eq_tol = 1e-9);

/// Residual |z1² − 4·z0·z2| evaluated on the unit representative: zero
/// exactly on the conic, the branch set of f_hat and lambda.
double conic_branch_distance(const CplxProj<2>& p);

/// Chordal distance from p to its conjugate: zero exactly on the real locus
/// of CP², the branch locus of eth.
double real_branch_distance(const CplxProj<2>& p);

}  // namespace s4cover
