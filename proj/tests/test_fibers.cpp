#include <doctest.h>

#include <cmath>

#include "s4cover/fibers.hpp"
#include "s4cover/quotient.hpp"
#include "s4cover/sampling.hpp"

using namespace s4cover;

namespace {
const S2Point kNorth{{0, 0, 1}};
const S2Point kSouth{{0, 0, -1}};
}  // namespace

TEST_CASE("fiber of f_hat at worked points") {
  {
    const auto fb = fiber_fhat(cp2(0, 1, 0));
    CHECK_FALSE(fb.on_branch);
    const bool hit0 = proj_eq(fb.first, cp1(0, 1), 1e-12) ||
                      proj_eq(fb.second, cp1(0, 1), 1e-12);
    const bool hit_inf = proj_eq(fb.first, cp1(1, 0), 1e-12) ||
                         proj_eq(fb.second, cp1(1, 0), 1e-12);
    CHECK(hit0);
    CHECK(hit_inf);
    CHECK(chordal_distance(f_hat(fb.first, fb.second), cp2(0, 1, 0)) <= 1e-12);
  }
  {
    const auto fb = fiber_fhat(cp2(1, 0, 0));
    CHECK(fb.on_branch);
    CHECK(proj_eq(fb.first, cp1(1, 0), 1e-12));
    CHECK(proj_eq(fb.second, fb.first, 1e-12));
  }
  {
    const auto fb = fiber_fhat(cp2(-1, 0, 1));
    CHECK_FALSE(fb.on_branch);
    const bool hit1 = proj_eq(fb.first, cp1(1, 1), 1e-12) ||
                      proj_eq(fb.second, cp1(1, 1), 1e-12);
    const bool hit2 = proj_eq(fb.first, cp1(1, -1), 1e-12) ||
                      proj_eq(fb.second, cp1(1, -1), 1e-12);
    CHECK(hit1);
    CHECK(hit2);
    CHECK(chordal_distance(f_hat(fb.first, fb.second), cp2(-1, 0, 1)) <=
          1e-12);
  }
}

TEST_CASE("fiber of lambda at worked points") {
  {
    const auto lf = fiber_lambda(cp2(0, 0, 1));
    CHECK(lf.on_branch);
    CHECK(pair_distance(lf.pair, {kSouth, kSouth}) <= 1e-12);
  }
  {
    const auto lf = fiber_lambda(cp2(0, 1, 0));
    const PairS2 want{kSouth, kNorth};
    CHECK(std::min(pair_distance(lf.pair, want),
                   pair_distance(lf.pair, tau_apply(want))) <= 1e-12);
  }
  for (int k = 0; k < 10; ++k) {
    SubstreamRng rng(51, k);
    const auto target = lambda_map(random_pair_s2(rng));
    const auto lf = fiber_lambda(target);
    CHECK(chordal_distance(lambda_map(lf.pair), target) <= 1e-9);
  }
}

TEST_CASE("fiber of g at worked points and round trips") {
  {
    const auto [a, b] = fiber_g_real(rp4(1, 0, 0, 0, 0));
    CHECK(proj_eq(a, rp2(1, 0, 0), 1e-9));
    CHECK(proj_eq(b, rp2(1, 0, 0), 1e-9));
  }
  {
    const auto [a, b] = fiber_g_real(rp4(0, 0, 1, 0, 0));
    const bool hit1 =
        proj_eq(a, rp2(1, 0, 0), 1e-9) || proj_eq(b, rp2(1, 0, 0), 1e-9);
    const bool hit2 =
        proj_eq(a, rp2(0, 0, 1), 1e-9) || proj_eq(b, rp2(0, 0, 1), 1e-9);
    CHECK(hit1);
    CHECK(hit2);
    CHECK(chordal_distance(g_real(a, b), rp4(0, 0, 1, 0, 0)) <= 1e-9);
  }
  for (int k = 0; k < 10; ++k) {
    SubstreamRng rng(52, k);
    const auto p = random_rproj<2>(rng);
    const auto q = random_rproj<2>(rng);
    const auto target = g_real(p, q);
    const auto [a, b] = fiber_g_real(target);
    CHECK(chordal_distance(g_real(a, b), target) <= 1e-9);
    // The recovered unordered pair is the original one.
    const double direct =
        std::max(chordal_distance(a, p), chordal_distance(b, q));
    const double swapped =
        std::max(chordal_distance(a, q), chordal_distance(b, p));
    CHECK(std::min(direct, swapped) <= 1e-7);
  }
}

TEST_CASE("fiber of g~ is the dihedral orbit") {
  {
    // Target over the diagonal: the orbit degenerates to two pairs.
    const auto gf = fiber_g_tilde(S4Point{{0, 0, 0, 0, 1}});
    CHECK(gf.on_branch);
    CHECK(gf.pairs.size() == 2);
    bool has_north = false, has_south = false;
    for (const auto& p : gf.pairs) {
      if (pair_distance(p, {kNorth, kNorth}) <= 1e-9) has_north = true;
      if (pair_distance(p, {kSouth, kSouth}) <= 1e-9) has_south = true;
    }
    CHECK(has_north);
    CHECK(has_south);
  }
  for (int k = 0; k < 50; ++k) {
    SubstreamRng rng(53, k);
    PairS2 p = random_pair_s2(rng);
    while (std::abs(p.first.t() * p.second.t()) < 1e-3 ||
           std::abs(std::abs(pair_dot(p)) - 1.0) < 1e-3)
      p = random_pair_s2(rng);
    const auto target = g_tilde(p);
    const auto gf = fiber_g_tilde(target);
    REQUIRE(gf.pairs.size() == 4);
    const Subgroup stab = subgroup_sigma2_tau();
    for (const auto& q : gf.pairs) {
      CHECK(sphere_distance(g_tilde(q), target) <= 1e-9);
      CHECK(eq_mod(q, p, stab, 1e-7));
    }
  }
  // Equatorial targets are a declared error.
  CHECK_THROWS_AS(fiber_g_tilde(S4Point{{1, 0, 0, 0, 0}}), DegenerateFiber);
}

TEST_CASE("fiber of G is the conjugate pair twisted by theta") {
  for (int k = 0; k < 50; ++k) {
    SubstreamRng rng(54, k);
    PairS2 p = random_pair_s2(rng);
    while (std::abs(p.first.t() * p.second.t()) < 1e-3 ||
           std::abs(std::abs(pair_dot(p)) - 1.0) < 1e-3 ||
           conic_branch_distance(lambda_map(p)) < 1e-3)
      p = random_pair_s2(rng);
    const auto target = g_tilde(p);
    const auto bf = fiber_big_g(target);
    REQUIRE(bf.points.size() == 2);
    CHECK_FALSE(bf.on_branch);
    for (const auto& z : bf.points)
      CHECK(sphere_distance(big_g(z), target) <= 1e-9);
    CHECK(chordal_distance(theta(conj_cp(theta_inv(bf.points[0]))),
                           bf.points[1]) <= 1e-7);
  }
}

TEST_CASE("branch distances") {
  CHECK(conic_branch_distance(cp2(1, 2, 1)) <= 1e-15);
  CHECK(real_branch_distance(cp2(1, 0, 0)) <= 1e-15);
  CHECK(real_branch_distance(cp2(0.3, -1.25, 4)) <= 1e-15);
  // |z1^2 - 4 z0 z2| is quadratic in the coordinates, so on the unit
  // representative of [1:i:0] it evaluates to 1/2.
  const Complex i{0, 1};
  CHECK(conic_branch_distance(cp2(1, i, 0)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  SubstreamRng rng(55, 0);
  const auto z = random_cproj<2>(rng);
  CHECK(real_branch_distance(z) > 1e-3);  // generic points are not real
}
