#include <doctest.h>

#include <cmath>

#include "s4cover/projective.hpp"
#include "s4cover/quadratic.hpp"
#include "s4cover/quaternion.hpp"
#include "s4cover/sampling.hpp"
#include "s4cover/sphere.hpp"
#include "test_helpers.hpp"

using namespace s4cover;

TEST_CASE("radial_normalize fixed values") {
  const auto a = radial_normalize<5>({0, 0, 0, 0, 2});
  CHECK(a[4] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(a[0] == 0.0);

  const auto b = radial_normalize<5>({3, 4, 0, 0, 0});
  CHECK(b[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(b[1] == doctest::Approx(0.8).epsilon(1e-15));

  const auto c = radial_normalize<5>({4, 0, 0, 0, 0});
  CHECK(c[0] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(radial_normalize<5>({0, 0, 0, 0, 0}), ZeroVector);
}

TEST_CASE("radial_normalize is scale invariant") {
  for (int i = 0; i < 1000; ++i) {
    SubstreamRng rng(11, i);
    std::array<double, 5> v;
    for (auto& x : v) x = rng.gaussian();
    const double c = std::exp(rng.uniform(-3.0, 3.0));
    std::array<double, 5> cv;
    for (std::size_t k = 0; k < 5; ++k) cv[k] = c * v[k];
    const auto p = radial_normalize<5>(v);
    const auto q = radial_normalize<5>(cv);
    for (std::size_t k = 0; k < 5; ++k)
      CHECK(std::abs(p[k] - q[k]) <= 4e-16);
  }
}

TEST_CASE("proj_eq basics") {
  CHECK(proj_eq(cp1(1, 0), cp1(2, 0), 1e-9));
  CHECK_FALSE(proj_eq(cp1(1, 0), cp1(0, 1), 1e-9));
  const Complex c{1.0, 1.0};
  CHECK(proj_eq(cp1(1, 1), cp1(c, c), 1e-9));
}

TEST_CASE("proj_eq is reflexive, symmetric, and scale invariant") {
  for (int i = 0; i < 10000; ++i) {
    SubstreamRng rng(12, i);
    const auto p = random_cproj<2>(rng);
    const auto q = random_cproj<2>(rng);
    CHECK(chordal_distance(p, p) <= 1e-12);
    CHECK(chordal_distance(p, q) ==
          doctest::Approx(chordal_distance(q, p)).epsilon(1e-12));
    Complex c = gaussian_complex(rng);
    while (std::abs(c) < 1e-3) c = gaussian_complex(rng);
    typename CplxProj<2>::Coords scaled;
    for (std::size_t k = 0; k < 3; ++k) scaled[k] = c * p.coords()[k];
    CHECK(proj_eq(p, CplxProj<2>(scaled), 1e-9));
  }
}

TEST_CASE("canonical representative is unit with nonnegative real pivot") {
  for (int i = 0; i < 1000; ++i) {
    SubstreamRng rng(13, i);
    const auto p = random_cproj<2>(rng).canonical();
    CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-12));
    std::size_t pivot = 0;
    double best = 0.0;
    for (std::size_t k = 0; k < 3; ++k)
      if (std::abs(p.coords()[k]) > best) {
        best = std::abs(p.coords()[k]);
        pivot = k;
      }
    CHECK(p.coords()[pivot].imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.coords()[pivot].real() >= 0.0);
  }
}

TEST_CASE("sphere_eq basics") {
  const S2Point n{{0, 0, 1}};
  const S2Point s{{0, 0, -1}};
  CHECK(sphere_eq(n, n, 1e-9));
  CHECK_FALSE(sphere_eq(n, s, 1e-9));
  const S2Point near_e1{{std::cos(1e-12), std::sin(1e-12), 0}};
  const S2Point e1{{1, 0, 0}};
  CHECK(sphere_eq(e1, near_e1, 1e-9));
}

TEST_CASE("samplers are deterministic in (seed, index)") {
  SubstreamRng a(1, 0);
  SubstreamRng b(1, 0);
  const auto p = random_sphere<2>(a);
  const auto q = random_sphere<2>(b);
  CHECK(p[0] == q[0]);
  CHECK(p[1] == q[1]);
  CHECK(p[2] == q[2]);

  SubstreamRng c(1, 1);
  const auto r = random_sphere<2>(c);
  CHECK(sphere_distance(p, r) > 1e-6);  // distinct substreams
}

TEST_CASE("sphere sampling is centered") {
  double mean[3] = {0, 0, 0};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    SubstreamRng rng(2, i);
    const auto p = random_sphere<2>(rng);
    for (int k = 0; k < 3; ++k) mean[k] += p[k];
  }
  for (int k = 0; k < 3; ++k) CHECK(std::abs(mean[k] / n) < 0.02);
}

TEST_CASE("random projective points come back canonical") {
  SubstreamRng rng(3, 0);
  const auto p = random_cproj<2>(rng);
  CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quaternion conjugation rotates imaginary vectors") {
  const Quaternion one{1, 0, 0, 0};
  const Quaternion i{0, 1, 0, 0};
  const Quaternion j{0, 0, 1, 0};

  const Quaternion r0 = quat_rotate_im(one, i);
  CHECK(r0.x == doctest::Approx(1.0));
  CHECK(std::abs(r0.w) <= 1e-15);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Quaternion q{inv_sqrt2, 0, 0, inv_sqrt2};  // quarter turn about k

  // Expected values from the independent rotation-matrix oracle.
  const auto ri = testing::rotate_by_matrix(q, {1, 0, 0});
  CHECK(ri[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ri[1] == doctest::Approx(1.0).epsilon(1e-12));
  const Quaternion qi = quat_rotate_im(q, i);
  CHECK(qi.x == doctest::Approx(ri[0]).epsilon(1e-12));
  CHECK(qi.y == doctest::Approx(ri[1]).epsilon(1e-12));
  CHECK(qi.z == doctest::Approx(ri[2]).epsilon(1e-12));

  const auto rj = testing::rotate_by_matrix(q, {0, 1, 0});
  CHECK(rj[0] == doctest::Approx(-1.0).epsilon(1e-12));
  const Quaternion qj = quat_rotate_im(q, j);
  CHECK(qj.x == doctest::Approx(rj[0]).epsilon(1e-12));
  CHECK(qj.y == doctest::Approx(rj[1]).epsilon(1e-12));

  CHECK_THROWS_AS(quat_rotate_im(Quaternion{2, 0, 0, 0}, i),
                  NonUnitQuaternion);
}

TEST_CASE("quaternion conjugation preserves the inner product") {
  for (int k = 0; k < 10000; ++k) {
    SubstreamRng rng(4, k);
    const Quaternion q = random_unit_quaternion(rng);
    const Quaternion v{0, rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const Quaternion w{0, rng.gaussian(), rng.gaussian(), rng.gaussian()};
    const Quaternion qv = quat_rotate_im(q, v);
    const Quaternion qw = quat_rotate_im(q, w);
    const double before = v.x * w.x + v.y * w.y + v.z * w.z;
    const double after = qv.x * qw.x + qv.y * qw.y + qv.z * qw.z;
    CHECK(std::abs(before - after) <= 1e-12 * (1.0 + std::abs(before)));
    CHECK(std::abs(qv.w) <= 1e-13 * (1.0 + v.norm()));  // stays imaginary
  }
}

TEST_CASE("solve_homog_quadratic fixed cases") {
  // XY = 0 has roots [0:1] and [1:0] (worked by hand from C X^2 - B XY + A Y^2
  // with (A,B,C) = (0,1,0)).
  {
    const auto r = solve_homog_quadratic(0, 1, 0);
    CHECK(r.discriminant == Complex{1, 0});
    CHECK_FALSE(r.double_root);
    const bool direct = proj_eq(r.first, cp1(1, 0), 1e-12) &&
                        proj_eq(r.second, cp1(0, 1), 1e-12);
    const bool swapped = proj_eq(r.first, cp1(0, 1), 1e-12) &&
                         proj_eq(r.second, cp1(1, 0), 1e-12);
    CHECK((direct || swapped));
  }
  // (X - Y)^2: the double root [1:1].
  {
    const auto r = solve_homog_quadratic(1, 2, 1);
    CHECK(r.double_root);
    CHECK(std::abs(r.discriminant) <= 1e-15);
    CHECK(proj_eq(r.first, cp1(1, 1), 1e-12));
    CHECK(proj_eq(r.second, r.first, 1e-12));
  }
  // X^2 = Y^2: roots [1:1], [1:-1].
  {
    const auto r = solve_homog_quadratic(-1, 0, 1);
    CHECK(r.discriminant == Complex{4, 0});
    const bool hit1 = proj_eq(r.first, cp1(1, 1), 1e-12) ||
                      proj_eq(r.second, cp1(1, 1), 1e-12);
    const bool hit2 = proj_eq(r.first, cp1(1, -1), 1e-12) ||
                      proj_eq(r.second, cp1(1, -1), 1e-12);
    CHECK(hit1);
    CHECK(hit2);
  }
  // C = B = 0: the point at infinity twice.
  {
    const auto r = solve_homog_quadratic(1, 0, 0);
    CHECK(r.double_root);
    CHECK(proj_eq(r.first, cp1(1, 0), 1e-12));
  }
  CHECK_THROWS_AS(solve_homog_quadratic(0, 0, 0), AllZero);
}

TEST_CASE("solve_homog_quadratic round-trips Vieta coefficients") {
  for (int i = 0; i < 10000; ++i) {
    SubstreamRng rng(5, i);
    const auto r1 = random_cproj<1>(rng);
    const auto r2 = random_cproj<1>(rng);
    const Complex x1 = r1.coords()[0], y1 = r1.coords()[1];
    const Complex x2 = r2.coords()[0], y2 = r2.coords()[1];
    // Elementary symmetric coefficients of the pair.
    const Complex a = x1 * x2, b = x1 * y2 + x2 * y1, c = y1 * y2;
    const auto sol = solve_homog_quadratic(a, b, c);
    const double match = std::min(
        std::max(chordal_distance(sol.first, r1),
                 chordal_distance(sol.second, r2)),
        std::max(chordal_distance(sol.first, r2),
                 chordal_distance(sol.second, r1)));
    CHECK(match <= 1e-9);
  }
}
