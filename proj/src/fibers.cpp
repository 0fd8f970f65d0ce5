#include "s4cover/fibers.hpp"

#include <algorithm>
#include <cmath>

#include "s4cover/errors.hpp"

namespace s4cover {

FhatFiber fiber_fhat(const CplxProj<2>& target, double eq_tol) {
  const auto z = target.canonical().coords();
  const HomogQuadRoots roots =
      solve_homog_quadratic(z[0], z[1], z[2], eq_tol);
  return {roots.first, roots.second, roots.discriminant, roots.double_root};
}

LambdaFiber fiber_lambda(const CplxProj<2>& target, double eq_tol) {
  const FhatFiber fb = fiber_fhat(target, eq_tol);
  return {{gamma_inv(fb.first), gamma_inv(fb.second)}, fb.on_branch};
}

namespace {

// Phase-fixes a complex root class [X:Y] to the real class
// [Re(cX) : Im(cX) : |Y|] with c = conj(Y)/|Y|; roots at infinity keep their
// coordinates verbatim (their phase cannot be recovered locally).
RealProj<2> real_class_of_root(const CplxProj<1>& root) {
  const Complex x = root.coords()[0];
  const Complex y = root.coords()[1];
  const double my = std::abs(y);
  if (my <= 1e-14 * std::abs(x)) {
    return rp2(x.real(), x.imag(), 0.0);
  }
  const Complex xf = x * (std::conj(y) / my);
  return rp2(xf.real(), xf.imag(), my);
}

bool forward_matches_g(const RealProj<2>& a, const RealProj<2>& b,
                       const RealProj<4>& target, double tol) {
  return chordal_distance(g_real(a, b), target) <= tol;
}

}  // namespace

std::pair<RealProj<2>, RealProj<2>> fiber_g_real(const RealProj<4>& target,
                                                 double eq_tol) {
  const auto p = target.canonical().coords();
  const Complex cp{p[0], p[1]};
  const Complex cq{p[2], p[3]};
  const Complex ct{p[4], 0.0};
  const HomogQuadRoots roots = solve_homog_quadratic(cp, cq, ct, eq_tol);

  RealProj<2> a = real_class_of_root(roots.first);
  RealProj<2> b = real_class_of_root(roots.second);
  const double fwd_tol = std::max(eq_tol, 1e-10);
  if (forward_matches_g(a, b, target, fwd_tol)) return {a, b};

  // A root at infinity carries an unrecoverable phase; its real class can
  // still be read off the target slots (r·t', s·t') when the other leg is
  // affine.
  const bool a_inf = std::abs(roots.first.coords()[1]) <=
                     1e-14 * std::abs(roots.first.coords()[0]);
  const bool b_inf = std::abs(roots.second.coords()[1]) <=
                     1e-14 * std::abs(roots.second.coords()[0]);
  if (a_inf != b_inf && std::hypot(p[2], p[3]) > 1e-14) {
    const RealProj<2> repaired = rp2(p[2], p[3], 0.0);
    if (a_inf && forward_matches_g(repaired, b, target, fwd_tol))
      return {repaired, b};
    if (b_inf && forward_matches_g(a, repaired, target, fwd_tol))
      return {a, repaired};
  }
  throw DegenerateFiber(
      "fiber_g_real: target is on the collapsed line at infinity; the fiber "
      "is not determined by the quadratic");
}

GTildeFiber fiber_g_tilde(const S4Point& target, double eq_tol) {
  const C2R t = unpack_c2r(target);
  if (std::abs(t.r) <= 1e-6)
    throw DegenerateFiber(
        "fiber_g_tilde: |tt'| <= 1e-6, the closed-form phase fix degenerates "
        "on the equatorial set");

  const HomogQuadRoots roots =
      solve_homog_quadratic(t.c1, t.c2, Complex{t.r, 0.0}, eq_tol);

  // Root [X:Y] decodes to the sphere point (cX, |Y|)/norm with c the phase
  // making Y real; the antipode is the other valid lift.
  const auto decode = [](const CplxProj<1>& root) {
    const Complex x = root.coords()[0];
    const Complex y = root.coords()[1];
    const double my = std::abs(y);
    const Complex xf = x * (std::conj(y) / my);
    const double n = std::sqrt(std::norm(x) + my * my);
    return S2Point::from_zt(xf / n, my / n);
  };
  const S2Point s1 = decode(roots.first);
  const S2Point s2 = decode(roots.second);

  // Wrong sign combinations land on the antipode of the target, distance 2
  // away, so the forward check is clear-cut.
  const double accept = std::max(100.0 * eq_tol, 1e-7);
  std::vector<PairS2> out;
  const auto consider = [&](const PairS2& cand) {
    if (sphere_distance(g_tilde(cand), target) > accept) return;
    for (const auto& q : out)
      if (pair_eq(q, cand, eq_tol)) return;
    out.push_back(cand);
  };
  for (const S2Point& a : {s1, antipodal(s1)})
    for (const S2Point& b : {s2, antipodal(s2)}) {
      consider({a, b});
      consider({b, a});
    }
  return {out, roots.double_root};
}

BigGFiber fiber_big_g(const S4Point& target, double eq_tol) {
  const GTildeFiber fib = fiber_g_tilde(target, eq_tol);
  std::vector<CplxProj<2>> points;
  for (const auto& p : fib.pairs) {
    const CplxProj<2> z = lambda_map(p);
    bool seen = false;
    for (const auto& q : points)
      if (proj_eq(z, q, std::max(eq_tol, 1e-7))) {
        seen = true;
        break;
      }
    if (!seen) points.push_back(z);
  }
  return {points, points.size() <= 1};
}

double conic_branch_distance(const CplxProj<2>& p) {
  const auto z = p.canonical().coords();
  return std::abs(z[1] * z[1] - 4.0 * z[0] * z[2]);
}

double real_branch_distance(const CplxProj<2>& p) {
  return chordal_distance(p, conj_cp(p));
}

}  // namespace s4cover
