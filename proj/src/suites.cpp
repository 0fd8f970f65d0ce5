#include "s4cover/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

#include "s4cover/fibers.hpp"
#include "s4cover/quotient.hpp"
#include "s4cover/sampling.hpp"

namespace s4cover {

namespace {

constexpr double kGenericGuard = 1e-3;
constexpr std::size_t kHullDirections = 200;
constexpr std::uint64_t kDirectionStreamOffset = 1ull << 40;

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(const Complex& z) {
  return "[" + fmt_num(z.real()) + "," + fmt_num(z.imag()) + "]";
}

std::string fmt_pair(const PairS2& p) {
  std::string out = "((";
  for (std::size_t i = 0; i < 3; ++i)
    out += fmt_num(p.first[i]) + (i < 2 ? "," : "),(");
  for (std::size_t i = 0; i < 3; ++i)
    out += fmt_num(p.second[i]) + (i < 2 ? "," : "))");
  return out;
}

template <std::size_t N>
std::string fmt_cproj(const CplxProj<N>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i <= N; ++i)
    out += fmt_complex(p.coords()[i]) + (i < N ? ":" : "]");
  return out;
}

std::string fmt_quat(const Quaternion& q) {
  return "(" + fmt_num(q.w) + "," + fmt_num(q.x) + "," + fmt_num(q.y) + "," +
         fmt_num(q.z) + ")";
}

class Collector {
 public:
  Collector(std::string suite, std::uint64_t samples, std::uint64_t seed,
            double headline_tol) {
    rep_.suite = std::move(suite);
    rep_.samples = samples;
    rep_.seed = seed;
    rep_.tolerance = headline_tol;
  }

  using Describe = std::function<FailureRecord()>;

  /// Error measured against the suite's headline tolerance.
  void headline(double err, const Describe& describe) {
    if (err > rep_.max_error) rep_.max_error = err;
    if (!(err <= rep_.tolerance)) fail(describe);
  }

  /// Side condition with its own tolerance; failures count, the error does
  /// not enter max_error (it is in different units than the headline).
  void aux(double err, double tol, const Describe& describe) {
    if (!(err <= tol)) fail(describe);
  }

  void fail(const Describe& describe) {
    failed_ = true;
    if (rep_.failures.size() < Report::kMaxFailures)
      rep_.failures.push_back(describe());
  }

  Report finish() {
    rep_.pass = rep_.max_error <= rep_.tolerance && !failed_;
    return rep_;
  }

 private:
  Report rep_;
  bool failed_ = false;
};

/// Pair kept away from the diagonal, the antipodal graph, the conic image,
/// and the equatorial set, so degree counts are tested only where the maps
/// are honestly generic.
PairS2 draw_generic_pair(SubstreamRng& rng) {
  for (;;) {
    const PairS2 p = random_pair_s2(rng);
    if (std::abs(std::abs(pair_dot(p)) - 1.0) < kGenericGuard) continue;
    if (std::abs(p.first.t() * p.second.t()) < kGenericGuard) continue;
    if (conic_branch_distance(lambda_map(p)) < kGenericGuard) continue;
    return p;
  }
}

CplxProj<2> draw_generic_cp2(SubstreamRng& rng) {
  for (;;) {
    const CplxProj<2> z = random_cproj<2>(rng);
    if (conic_branch_distance(z) < kGenericGuard) continue;
    if (real_branch_distance(z) < kGenericGuard) continue;
    return z;
  }
}

// --------------------------------------------------------------------------
// group: sigma^4 = tau^2 = 1, tau sigma tau = sigma^-1, sigma(diagonal) =
// antipodal graph, all as actions.
// --------------------------------------------------------------------------
Report group_suite(std::uint64_t samples, std::uint64_t seed,
                   const Tolerance& tol) {
  Collector col("group", samples, seed, tol.suite_tol);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);
    const PairS2 p = random_pair_s2(rng);

    PairS2 q = p;
    for (int k = 0; k < 4; ++k) q = sigma_apply(q);
    col.headline(pair_distance(q, p), [&] {
      return FailureRecord{fmt_pair(p), fmt_pair(q), "sigma^4 = identity"};
    });

    const PairS2 t2 = tau_apply(tau_apply(p));
    col.headline(pair_distance(t2, p), [&] {
      return FailureRecord{fmt_pair(p), fmt_pair(t2), "tau^2 = identity"};
    });

    const PairS2 lhs = tau_apply(sigma_apply(tau_apply(p)));
    const PairS2 rhs = sigma_apply(sigma_apply(sigma_apply(p)));
    col.headline(pair_distance(lhs, rhs), [&] {
      return FailureRecord{fmt_pair(p), fmt_pair(lhs),
                           "tau sigma tau = sigma^-1"};
    });

    const PairS2 diag{p.first, p.first};
    const double d = pair_dot(sigma_apply(diag));
    col.headline(std::abs(d + 1.0), [&] {
      return FailureRecord{fmt_pair(diag), fmt_num(d),
                           "sigma maps the diagonal to the antipodal graph"};
    });
  }
  return col.finish();
}

// --------------------------------------------------------------------------
// free-action: off the diagonal and antipodal graph no nonidentity element
// has a fixed point; tau fixes the diagonal pointwise.
// --------------------------------------------------------------------------
Report free_action_suite(std::uint64_t samples, std::uint64_t seed,
                         const Tolerance& tol) {
  Collector col("free-action", samples, seed, tol.suite_tol);
  // With |s.s'| <= 0.9 every nonidentity element moves the pair by at least
  // sqrt(4 - 4*0.9) ~ 0.632; 0.6 leaves slack for rounding.
  constexpr double kMinMove = 0.6;
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);
    PairS2 p = random_pair_s2(rng);
    while (std::abs(pair_dot(p)) > 0.9) p = random_pair_s2(rng);

    double min_move = 4.0;
    for (const auto& e : dihedral_all()) {
      if (e == DihedralElement::identity()) continue;
      min_move = std::min(min_move, pair_distance(dihedral_apply(e, p), p));
    }
    col.headline(std::max(0.0, kMinMove - min_move), [&] {
      return FailureRecord{fmt_pair(p), fmt_num(min_move),
                           "min move >= " + fmt_num(kMinMove)};
    });

    const PairS2 diag{p.first, p.first};
    col.headline(pair_distance(tau_apply(diag), diag), [&] {
      return FailureRecord{fmt_pair(diag), fmt_pair(tau_apply(diag)),
                           "tau fixes diagonal pairs"};
    });
  }
  return col.finish();
}

// --------------------------------------------------------------------------
// diagram: all edge-path composites from the top of the quotient lattice
// agree, and every model map is constant on its subgroup's orbits.
// --------------------------------------------------------------------------
Report diagram_suite(std::uint64_t samples, std::uint64_t seed,
                     const Tolerance& tol) {
  Collector col("diagram", samples, seed, tol.suite_tol);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);
    const PairS2 p = random_pair_s2(rng);

    for (const auto& node : lattice_nodes()) {
      const auto& paths = lattice_paths(node.id);
      const ModelValue base = node.model_map(p);
      for (const auto& path : paths) {
        const ModelValue v = evaluate_path(path, p);
        col.headline(node.model_distance(v, base), [&] {
          return FailureRecord{fmt_pair(p), "path composite into " + node.name,
                               "all composites agree with the model map"};
        });
      }
      for (const auto& e : node.subgroup.elements) {
        const ModelValue moved = node.model_map(dihedral_apply(e, p));
        col.headline(node.model_distance(moved, base), [&] {
          return FailureRecord{fmt_pair(p),
                               node.name + " model map moved by " +
                                   dihedral_name(e),
                               "model map constant on subgroup orbits"};
        });
      }
    }
  }
  return col.finish();
}

// --------------------------------------------------------------------------
// covering: fiber solvers return genuine preimages with the generic degree
// counts (2 for f_hat/lambda/G, 4 for g~), and on-conic targets give one
// class of multiplicity two.
// --------------------------------------------------------------------------
Report covering_suite(std::uint64_t samples, std::uint64_t seed,
                      const Tolerance& tol) {
  Collector col("covering", samples, seed, tol.suite_tol);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);
    const PairS2 p = draw_generic_pair(rng);

    const CplxProj<2> t1 = lambda_map(p);
    const FhatFiber fb = fiber_fhat(t1, tol.eq_tol);
    col.headline(chordal_distance(f_hat(fb.first, fb.second), t1), [&] {
      return FailureRecord{fmt_cproj(t1), "f_hat of fiber", "target"};
    });
    if (fb.on_branch)
      col.fail([&] {
        return FailureRecord{fmt_cproj(t1), "on_branch=true",
                             "generic target off the conic"};
      });
    if (chordal_distance(fb.first, fb.second) <= 1e-4)
      col.fail([&] {
        return FailureRecord{fmt_cproj(t1), "fiber classes collapsed",
                             "two distinct classes"};
      });

    const LambdaFiber lf = fiber_lambda(t1, tol.eq_tol);
    col.headline(chordal_distance(lambda_map(lf.pair), t1), [&] {
      return FailureRecord{fmt_cproj(t1), "lambda of fiber", "target"};
    });
    col.headline(std::min(pair_distance(lf.pair, p),
                          pair_distance(lf.pair, tau_apply(p))),
                 [&] {
                   return FailureRecord{fmt_cproj(t1), fmt_pair(lf.pair),
                                        "fiber is {p, tau p}"};
                 });

    const S4Point t2 = g_tilde(p);
    const GTildeFiber gf = fiber_g_tilde(t2, tol.eq_tol);
    if (gf.pairs.size() != 4)
      col.fail([&] {
        return FailureRecord{fmt_pair(p),
                             "g~ fiber size " + fmt_num(double(gf.pairs.size())),
                             "generic fiber size 4"};
      });
    const PairS2 orbit[4] = {p, tau_apply(p), sigma_apply(sigma_apply(p)),
                             sigma_apply(sigma_apply(tau_apply(p)))};
    for (const PairS2& o : orbit) {
      double best = 4.0;
      for (const auto& q : gf.pairs) best = std::min(best, pair_distance(q, o));
      col.headline(best, [&] {
        return FailureRecord{fmt_pair(o), "nearest fiber member " + fmt_num(best),
                             "fiber equals the <s2,t>-orbit"};
      });
    }
    for (const auto& q : gf.pairs)
      col.headline(sphere_distance(g_tilde(q), t2), [&] {
        return FailureRecord{fmt_pair(q), "g~ of fiber member", "target"};
      });

    const BigGFiber bf = fiber_big_g(t2, tol.eq_tol);
    if (bf.points.size() != 2)
      col.fail([&] {
        return FailureRecord{fmt_pair(p),
                             "G fiber size " + fmt_num(double(bf.points.size())),
                             "generic fiber size 2"};
      });
    for (const auto& z : bf.points)
      col.headline(sphere_distance(big_g(z), t2), [&] {
        return FailureRecord{fmt_cproj(z), "G of fiber member", "target"};
      });
    if (bf.points.size() == 2) {
      const CplxProj<2> twisted = theta(conj_cp(theta_inv(bf.points[0])));
      col.headline(chordal_distance(twisted, bf.points[1]), [&] {
        return FailureRecord{fmt_cproj(bf.points[0]), fmt_cproj(twisted),
                             "classes exchanged by theta c2 theta^-1"};
      });
    }

    // On-conic target: single class of multiplicity 2, tiny discriminant.
    const S2Point s = random_sphere<2>(rng);
    const CplxProj<2> tc = lambda_map({s, s});
    const FhatFiber fbc = fiber_fhat(tc, tol.eq_tol);
    if (!fbc.on_branch)
      col.fail([&] {
        return FailureRecord{fmt_cproj(tc), "on_branch=false",
                             "diagonal image lies on the conic"};
      });
    col.headline(chordal_distance(fbc.first, fbc.second), [&] {
      return FailureRecord{fmt_cproj(tc), "double root split",
                           "one class of multiplicity 2"};
    });
    col.headline(chordal_distance(f_hat(fbc.first, fbc.second), tc), [&] {
      return FailureRecord{fmt_cproj(tc), "f_hat of double root", "target"};
    });
    const auto zc = tc.canonical().coords();
    const double rel_disc =
        std::abs(fbc.discriminant) /
        (std::norm(zc[1]) + 4.0 * std::abs(zc[0]) * std::abs(zc[2]) + 1.0);
    col.headline(rel_disc, [&] {
      return FailureRecord{fmt_cproj(tc), fmt_num(rel_disc),
                           "relative discriminant ~ 0 on the conic"};
    });
  }
  return col.finish();
}

// --------------------------------------------------------------------------
// branch: the discriminant vanishes exactly on diagonal images, eth branches
// exactly over the real locus, and fibers collapse there.
// --------------------------------------------------------------------------
Report branch_suite(std::uint64_t samples, std::uint64_t seed,
                    const Tolerance& tol) {
  Collector col("branch", samples, seed, tol.suite_tol);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);

    const S2Point s = random_sphere<2>(rng);
    const CplxProj<2> tc = lambda_map({s, s});
    col.headline(conic_branch_distance(tc), [&] {
      return FailureRecord{fmt_cproj(tc), fmt_num(conic_branch_distance(tc)),
                           "z1^2 = 4 z0 z2 on diagonal images"};
    });
    const FhatFiber fbc = fiber_fhat(tc, tol.eq_tol);
    if (!fbc.on_branch)
      col.fail([&] {
        return FailureRecord{fmt_cproj(tc), "on_branch=false",
                             "double root on the conic"};
      });
    col.headline(chordal_distance(fbc.first, fbc.second), [&] {
      return FailureRecord{fmt_cproj(tc), "split double root",
                           "fiber degenerates to one class"};
    });

    const PairS2 generic = draw_generic_pair(rng);
    if (fiber_fhat(lambda_map(generic), tol.eq_tol).on_branch)
      col.fail([&] {
        return FailureRecord{fmt_pair(generic), "on_branch=true",
                             "no double root off the conic"};
      });

    // eth over the real locus: the point is identified with its conjugate
    // trivially, and where the equatorial guard allows the closed-form
    // solver, the fiber collapses to the single class of the point.
    const RealProj<2> rp = random_rproj<2>(rng);
    const CplxProj<2> zr =
        cp2(rp.coords()[0], rp.coords()[1], rp.coords()[2]);
    col.headline(real_branch_distance(zr), [&] {
      return FailureRecord{fmt_cproj(zr), fmt_num(real_branch_distance(zr)),
                           "real points are conjugation-fixed"};
    });
    const S4Point yr = eth(zr);
    if (std::abs(unpack_c2r(yr).r) > kGenericGuard) {
      const BigGFiber bfr = fiber_big_g(yr, tol.eq_tol);
      if (!bfr.on_branch)
        col.fail([&] {
          return FailureRecord{fmt_cproj(zr), "eth fiber has 2 classes",
                               "eth fiber collapses over the branch set"};
        });
      for (const auto& z : bfr.points)
        col.headline(chordal_distance(theta_inv(z), zr), [&] {
          return FailureRecord{fmt_cproj(zr), fmt_cproj(theta_inv(z)),
                               "eth fiber is the real point itself"};
        });
    }

    // Generic complex point: eth identifies exactly the conjugate pair.
    CplxProj<2> zg = draw_generic_cp2(rng);
    while (std::abs(unpack_c2r(eth(zg)).r) <= kGenericGuard)
      zg = draw_generic_cp2(rng);
    const S4Point yg = eth(zg);
    col.headline(sphere_distance(eth(conj_cp(zg)), yg), [&] {
      return FailureRecord{fmt_cproj(zg), "eth(c2 z)", "eth(z)"};
    });
    const BigGFiber bfg = fiber_big_g(yg, tol.eq_tol);
    if (bfg.points.size() != 2)
      col.fail([&] {
        return FailureRecord{fmt_cproj(zg),
                             "eth fiber size " +
                                 fmt_num(double(bfg.points.size())),
                             "two classes off the branch set"};
      });
    for (const CplxProj<2> want : {zg, conj_cp(zg)}) {
      double best = 4.0;
      for (const auto& z : bfg.points)
        best = std::min(best, chordal_distance(theta_inv(z), want));
      col.headline(best, [&] {
        return FailureRecord{fmt_cproj(zg), fmt_num(best),
                             "eth fiber is {z, c2 z}"};
      });
    }
  }
  return col.finish();
}

// --------------------------------------------------------------------------
// partition: pair_dot anti-commutes with sigma, the quaternionic cover lands
// in C_0 and identifies antipodes, and C_x levels are swapped to C_-x.
// --------------------------------------------------------------------------
Report partition_suite(std::uint64_t samples, std::uint64_t seed,
                       const Tolerance& tol) {
  Collector col("partition", samples, seed, tol.suite_tol);
  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);

    const PairS2 p = random_pair_s2(rng);
    col.headline(std::abs(pair_dot(sigma_apply(p)) + pair_dot(p)), [&] {
      return FailureRecord{fmt_pair(p), fmt_num(pair_dot(sigma_apply(p))),
                           "pair_dot(sigma p) = -pair_dot(p)"};
    });

    const Quaternion q = random_unit_quaternion(rng);
    const PairS2 c = s3_double_cover(q);
    col.headline(std::abs(dot(c.first, c.second)), [&] {
      return FailureRecord{fmt_quat(q), fmt_num(dot(c.first, c.second)),
                           "image in C_0"};
    });
    col.headline(pair_distance(s3_double_cover(-q), c), [&] {
      return FailureRecord{fmt_quat(q), "cover(-q) != cover(q)",
                           "antipodes identified"};
    });

    const double x = rng.uniform01();
    const PairS2 lv = sample_c_level(x, rng);
    col.headline(std::abs(pair_dot(lv) - x), [&] {
      return FailureRecord{fmt_pair(lv), fmt_num(pair_dot(lv)),
                           "level sample at x = " + fmt_num(x)};
    });
    col.headline(std::abs(pair_dot(sigma_apply(lv)) + x), [&] {
      return FailureRecord{fmt_pair(lv), fmt_num(pair_dot(sigma_apply(lv))),
                           "sigma swaps C_x to C_-x"};
    });
  }
  return col.finish();
}

// --------------------------------------------------------------------------
// kuiper: eta's invariances, the affine hyperplane, the Veronese restriction,
// and sampled support-function evidence that eta(S^5) and the convex hull
// boundary of eta(Sigma) agree.
// --------------------------------------------------------------------------
Report kuiper_suite(std::uint64_t samples, std::uint64_t seed,
                    const Tolerance& tol) {
  Collector col("kuiper", samples, seed, tol.hull_tol);
  std::vector<std::array<double, 6>> cloud_s5;
  std::vector<std::array<double, 6>> cloud_sigma;
  cloud_s5.reserve(samples);
  cloud_sigma.reserve(samples);

  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);
    const auto v = random_unit_c3(rng);
    const auto e0 = eta_kuiper(v);
    cloud_s5.push_back(e0);

    const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const Complex zeta = std::polar(1.0, phi);
    const auto e_rot = eta_kuiper({zeta * v[0], zeta * v[1], zeta * v[2]});
    const auto e_conj = eta_kuiper(
        {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])});
    double rot_err = 0.0, conj_err = 0.0;
    for (std::size_t k = 0; k < 6; ++k) {
      rot_err = std::max(rot_err, std::abs(e_rot[k] - e0[k]));
      conj_err = std::max(conj_err, std::abs(e_conj[k] - e0[k]));
    }
    col.aux(rot_err, tol.suite_tol, [&] {
      return FailureRecord{"sample " + fmt_num(double(i)), fmt_num(rot_err),
                           "eta(zeta v) = eta(v)"};
    });
    col.aux(conj_err, tol.suite_tol, [&] {
      return FailureRecord{"sample " + fmt_num(double(i)), fmt_num(conj_err),
                           "eta(conj v) = eta(v)"};
    });
    col.aux(std::abs(e0[0] + e0[1] + e0[2] - 1.0), tol.suite_tol, [&] {
      return FailureRecord{"sample " + fmt_num(double(i)),
                           fmt_num(e0[0] + e0[1] + e0[2]),
                           "x1 + x2 + x3 = 1 on eta(S^5)"};
    });

    // Real slice Sigma: eta restricts to the quadratic Veronese monomials.
    const S2Point xr = random_sphere<2>(rng);
    const std::array<Complex, 3> vr{Complex{xr[0], 0.0}, Complex{xr[1], 0.0},
                                    Complex{xr[2], 0.0}};
    const auto es = eta_kuiper(vr);
    cloud_sigma.push_back(es);
    const std::array<double, 6> veronese{
        xr[0] * xr[0], xr[1] * xr[1], xr[2] * xr[2],
        xr[1] * xr[2], xr[2] * xr[0], xr[0] * xr[1]};
    double ver_err = 0.0;
    for (std::size_t k = 0; k < 6; ++k)
      ver_err = std::max(ver_err, std::abs(es[k] - veronese[k]));
    col.aux(ver_err, tol.suite_tol, [&] {
      return FailureRecord{"sample " + fmt_num(double(i)), fmt_num(ver_err),
                           "eta on Sigma is the Veronese embedding"};
    });
  }

  // Support functions of the two clouds along random directions. Equal
  // support over a dense direction set is the sampled consequence of
  // eta(S^5) being the boundary of the convex hull of eta(Sigma).
  for (std::size_t k = 0; k < kHullDirections; ++k) {
    SubstreamRng rng(seed, kDirectionStreamOffset + k);
    std::array<double, 6> d;
    double nsq = 0.0;
    for (auto& x : d) {
      x = rng.gaussian();
      nsq += x * x;
    }
    const double n = std::sqrt(nsq);
    for (auto& x : d) x /= n;

    const auto support = [&d](const std::vector<std::array<double, 6>>& cloud) {
      double best = -1e300;
      for (const auto& pt : cloud) {
        double s = 0.0;
        for (std::size_t j = 0; j < 6; ++j) s += d[j] * pt[j];
        best = std::max(best, s);
      }
      return best;
    };
    const double gap = std::abs(support(cloud_s5) - support(cloud_sigma));
    col.headline(gap, [&] {
      return FailureRecord{"direction " + fmt_num(double(k)), fmt_num(gap),
                           "support functions agree within hull_tol"};
    });
  }
  return col.finish();
}

}  // namespace

// --------------------------------------------------------------------------
// identities: every displayed identity between the named maps.
// --------------------------------------------------------------------------
Report run_identities_suite(std::uint64_t samples, std::uint64_t seed,
                            const Tolerance& tol, EthFn eth_fn) {
  if (!eth_fn) eth_fn = [](const CplxProj<2>& p) { return eth(p); };
  Collector col("identities", samples, seed, tol.suite_tol);

  for (std::uint64_t i = 0; i < samples; ++i) {
    SubstreamRng rng(seed, i);

    // beta f alpha = (w, z^2) on C^2.
    const Complex w = gaussian_complex(rng);
    const Complex z = gaussian_complex(rng);
    const auto [aw, az] = alpha_map(w, z);
    const auto [fw, fz] = f_affine(aw, az);
    const auto [bw, bz] = beta_map(fw, fz);
    const double bfa_err = (std::abs(bw - w) + std::abs(bz - z * z)) /
                           (1.0 + std::abs(w) + std::norm(z));
    col.headline(bfa_err, [&] {
      return FailureRecord{fmt_complex(w) + "," + fmt_complex(z),
                           fmt_complex(bw) + "," + fmt_complex(bz),
                           "beta f alpha = (w, z^2)"};
    });

    // f_hat (c1 x c1) = c2 f_hat.
    const CplxProj<1> p1 = random_cproj<1>(rng);
    const CplxProj<1> p2 = random_cproj<1>(rng);
    col.headline(chordal_distance(f_hat(conj_cp(p1), conj_cp(p2)),
                                  conj_cp(f_hat(p1, p2))),
                 [&] {
                   return FailureRecord{fmt_cproj(p1) + "," + fmt_cproj(p2),
                                        "f_hat(c1 p, c1 q)", "c2 f_hat(p, q)"};
                 });

    // lambda tau = lambda; lambda sigma^2 = theta^2 c2 lambda
    //                                     = theta c2 theta^-1 lambda.
    const PairS2 pr = random_pair_s2(rng);
    const CplxProj<2> lam = lambda_map(pr);
    col.headline(chordal_distance(lambda_map(tau_apply(pr)), lam), [&] {
      return FailureRecord{fmt_pair(pr), "lambda(tau p)", "lambda(p)"};
    });
    const CplxProj<2> lam_s2 = lambda_map(sigma_apply(sigma_apply(pr)));
    col.headline(chordal_distance(lam_s2, theta(theta(conj_cp(lam)))), [&] {
      return FailureRecord{fmt_pair(pr), "lambda(sigma^2 p)",
                           "theta^2 c2 lambda(p)"};
    });
    col.headline(chordal_distance(lam_s2, theta(conj_cp(theta_inv(lam)))),
                 [&] {
                   return FailureRecord{fmt_pair(pr), "lambda(sigma^2 p)",
                                        "theta c2 theta^-1 lambda(p)"};
                 });

    // theta^4 = id and c2 theta c2 = theta^-1.
    const CplxProj<2> zc = random_cproj<2>(rng);
    col.headline(
        chordal_distance(theta(theta(theta(theta(zc)))), zc), [&] {
          return FailureRecord{fmt_cproj(zc), "theta^4(z)", "z"};
        });
    col.headline(
        chordal_distance(conj_cp(theta(conj_cp(zc))), theta_inv(zc)), [&] {
          return FailureRecord{fmt_cproj(zc), "c2 theta c2", "theta^-1"};
        });

    // G lambda = g~.
    col.headline(sphere_distance(big_g(lam), g_tilde(pr)), [&] {
      return FailureRecord{fmt_pair(pr), "G(lambda p)", "g~(p)"};
    });

    // eth = G theta and eth c2 = eth.
    col.headline(sphere_distance(eth_fn(zc), big_g(theta(zc))), [&] {
      return FailureRecord{fmt_cproj(zc), "eth(z)", "G(theta z)"};
    });
    col.headline(sphere_distance(eth_fn(conj_cp(zc)), eth_fn(zc)), [&] {
      return FailureRecord{fmt_cproj(zc), "eth(c2 z)", "eth(z)"};
    });

    // Norm of the unnormalized g~ tuple.
    const auto raw = g_tilde_unnormalized(pr);
    double nsq = 0.0;
    for (double x : raw) nsq += x * x;
    col.headline(std::abs(std::sqrt(nsq) - g_tilde_norm_formula(pr)), [&] {
      return FailureRecord{fmt_pair(pr), fmt_num(std::sqrt(nsq)),
                           "norm = sqrt(1 + 2tt'(rr'+ss'))"};
    });
  }
  return col.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "group",    "free-action", "diagram",   "identities",
      "covering", "branch",      "partition", "kuiper"};
  return names;
}

std::uint64_t default_suite_samples(std::string_view id) {
  if (id == "group" || id == "identities" || id == "partition") return 10000;
  if (id == "kuiper") return 100000;
  return 1000;  // free-action, diagram, covering, branch
}

Report run_suite(std::string_view id, std::uint64_t samples,
                 std::uint64_t seed, const Tolerance& tol) {
  tol.validate();
  if (id == "group") return group_suite(samples, seed, tol);
  if (id == "free-action") return free_action_suite(samples, seed, tol);
  if (id == "diagram") return diagram_suite(samples, seed, tol);
  if (id == "identities") return run_identities_suite(samples, seed, tol);
  if (id == "covering") return covering_suite(samples, seed, tol);
  if (id == "branch") return branch_suite(samples, seed, tol);
  if (id == "partition") return partition_suite(samples, seed, tol);
  if (id == "kuiper") return kuiper_suite(samples, seed, tol);
  throw UnknownSuite("run_suite: unknown suite '" + std::string(id) + "'");
}

}  // namespace s4cover
