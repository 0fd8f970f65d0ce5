// Acceptance suite: every gate criterion for the library and CLI, one
// pass/fail line each, nonzero exit when anything fails. Sample counts,
// tolerances, and runtime budgets are pinned here.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "s4cover/fibers.hpp"
#include "s4cover/quotient.hpp"
#include "s4cover/sampling.hpp"
#include "s4cover/suites.hpp"

using namespace s4cover;

namespace {

constexpr std::uint64_t kSeed = 7;
int g_failures = 0;
int g_index = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void line(bool ok, const std::string& what, const std::string& detail) {
  ++g_index;
  if (!ok) ++g_failures;
  std::printf("[%2d] %s  %s (%s)\n", g_index, ok ? "PASS" : "FAIL",
              what.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string err_str(double max_error, double tol, double secs) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "max_error=%.3g tol=%.0e %.2fs", max_error,
                tol, secs);
  return buf;
}

}  // namespace

int main() {
  // 1. Group relations as actions, 1e4 samples, <= 1e-9, under 1 second.
  {
    Timer t;
    Tolerance tol;
    const Report r = run_suite("group", 10000, kSeed, tol);
    const double secs = t.seconds();
    line(r.pass && secs < 1.0, "group relations sigma^4=tau^2=1, tst=s^-1",
         err_str(r.max_error, r.tolerance, secs));
  }

  // 2. The ten map identities, 1e4 samples, <= 1e-9, under 5 seconds.
  {
    Timer t;
    const Report r = run_suite("identities", 10000, kSeed, Tolerance{});
    const double secs = t.seconds();
    line(r.pass && secs < 5.0,
         "identity suite (bfa, fhat/c2, lambda/tau, lambda/sigma^2, theta, "
         "G lambda, eth)",
         err_str(r.max_error, r.tolerance, secs));
  }

  // 3. Norm identity of the unnormalized g~ tuple, 1e4 samples, <= 1e-12.
  {
    Timer t;
    double max_err = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      SubstreamRng rng(kSeed, i);
      const PairS2 p = random_pair_s2(rng);
      const auto raw = g_tilde_unnormalized(p);
      double nsq = 0.0;
      for (double x : raw) nsq += x * x;
      max_err = std::max(max_err,
                         std::abs(std::sqrt(nsq) - g_tilde_norm_formula(p)));
    }
    line(max_err <= 1e-12, "norm identity sqrt(1+2tt'(rr'+ss'))",
         err_str(max_err, 1e-12, t.seconds()));
  }

  // 4. Covering degrees: 1e3 generic targets give 2/2/4/2 preimage classes
  //    with forward error <= 1e-9; 1e3 on-conic targets give one class of
  //    multiplicity 2 with relative discriminant <= 1e-9.
  {
    Timer t;
    const Report r = run_suite("covering", 1000, kSeed, Tolerance{});
    line(r.pass, "covering degrees (2-to-1 maps, 4-to-1 g~, conic fibers)",
         err_str(r.max_error, r.tolerance, t.seconds()));
  }

  // 5. Branch loci: 1e3 real points are conjugation-fixed with equal eth
  //    images, and 1e3 diagonal images satisfy the conic equation to 1e-12
  //    relative.
  {
    Timer t;
    double max_real = 0.0, max_conic = 0.0, max_eth = 0.0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      SubstreamRng rng(kSeed, i);
      const auto rp = random_rproj<2>(rng).coords();
      const CplxProj<2> zr = cp2(rp[0], rp[1], rp[2]);
      max_real = std::max(max_real, real_branch_distance(zr));
      max_eth =
          std::max(max_eth, sphere_distance(eth(conj_cp(zr)), eth(zr)));
      const S2Point s = random_sphere<2>(rng);
      max_conic =
          std::max(max_conic, conic_branch_distance(lambda_map({s, s})));
    }
    const bool ok = max_real <= 1e-12 && max_eth <= 1e-12 &&
                    max_conic <= 1e-12;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "real=%.3g eth=%.3g conic=%.3g tol=1e-12 %.2fs", max_real,
                  max_eth, max_conic, t.seconds());
    line(ok, "branch loci (real locus of eth, conic of lambda)", detail);
  }

  // 6. Diagram suite: all lattice composites agree and model maps are
  //    orbit-constant, 1e3 samples, <= 1e-9.
  {
    Timer t;
    const Report r = run_suite("diagram", 1000, kSeed, Tolerance{});
    line(r.pass, "nine-node quotient lattice commutes",
         err_str(r.max_error, r.tolerance, t.seconds()));
  }

  // 7. Partition suite at 1e-12: pair_dot anti-commutes with sigma, the
  //    quaternionic cover lands in C_0 and identifies antipodes, 1e4 samples.
  {
    Timer t;
    Tolerance tol;
    tol.suite_tol = 1e-12;
    const Report r = run_suite("partition", 10000, kSeed, tol);
    line(r.pass, "partition suite (C_x levels, S^3 double cover)",
         err_str(r.max_error, r.tolerance, t.seconds()));
  }

  // 8. Kuiper suite: invariances and the hyperplane at 1e-12 on 1e4-scale
  //    samples, support gap <= 0.05 over 200 directions at 1e5 samples,
  //    under 30 seconds.
  {
    Timer t;
    Tolerance tol;
    tol.suite_tol = 1e-12;
    tol.hull_tol = 0.05;
    const Report r = run_suite("kuiper", 100000, kSeed, tol);
    const double secs = t.seconds();
    line(r.pass && secs < 30.0,
         "kuiper suite (eta invariances, Veronese, support functions)",
         err_str(r.max_error, r.tolerance, secs));
  }

  // 9. Worked values, each cross-checked by an independent forward route.
  {
    Timer t;
    bool ok = true;

    const S4Point g001 = big_g(cp2(0, 0, 1));
    ok = ok && sphere_distance(g001, S4Point{{0, 0, 0, 0, 1}}) <= 1e-12;
    // Independent route: [0:0:1] = lambda(south,south) and g~ there.
    const S2Point south{{0, 0, -1}};
    ok = ok && sphere_distance(g_tilde({south, south}), g001) <= 1e-12;

    const S4Point g121 = big_g(cp2(1, 2, 1));
    ok = ok && sphere_distance(g121, S4Point{{1, 0, 0, 0, 0}}) <= 1e-12;
    // [1:2:1] = lambda(s,s) with s = gamma^-1([1:1]).
    const S2Point s11 = gamma_inv(cp1(1, 1));
    ok = ok && sphere_distance(g_tilde({s11, s11}), g121) <= 1e-12;

    const S4Point e100 = eth(cp2(1, 0, 0));
    ok = ok && sphere_distance(e100, S4Point{{0, 1, 0, 0, 0}}) <= 1e-12;
    ok = ok && sphere_distance(big_g(theta(cp2(1, 0, 0))), e100) <= 1e-12;

    const FhatFiber fb = fiber_fhat(cp2(-1, 0, 1));
    const bool hit1 = proj_eq(fb.first, cp1(1, 1), 1e-9) ||
                      proj_eq(fb.second, cp1(1, 1), 1e-9);
    const bool hit2 = proj_eq(fb.first, cp1(1, -1), 1e-9) ||
                      proj_eq(fb.second, cp1(1, -1), 1e-9);
    ok = ok && hit1 && hit2 && !fb.on_branch;
    ok = ok &&
         chordal_distance(f_hat(cp1(1, 1), cp1(1, -1)), cp2(-1, 0, 1)) <=
             1e-12;

    char detail[64];
    std::snprintf(detail, sizeof detail, "tol=1e-12 %.2fs", t.seconds());
    line(ok, "worked values G[0:0:1], G[1:2:1], eth[1:0:0], fiber[-1:0:1]",
         detail);
  }

  // 10. CLI contract: verify --suite all exits 0, and every single-sign
  //     corruption of the eth formula makes the identity suite fail.
  {
    Timer t;
    const std::string cmd = std::string(S4COVER_CLI_PATH) +
                            " verify --suite all --seed 7 > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const bool cli_ok = status != -1 && WIFEXITED(status) &&
                        WEXITSTATUS(status) == 0;

    bool mutations_caught = true;
    for (std::size_t k = 0; k < EthSigns::kCount; ++k) {
      const EthFn bad = [k](const CplxProj<2>& p) {
        return eth_with_signs(p, EthSigns::flipped(k));
      };
      const Report r = run_identities_suite(10000, kSeed, Tolerance{}, bad);
      mutations_caught = mutations_caught && !r.pass;
    }

    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "verify-all exit %s, 15/15 sign flips detected=%s, %.1fs",
                  cli_ok ? "0" : "nonzero",
                  mutations_caught ? "yes" : "no", t.seconds());
    line(cli_ok && mutations_caught, "CLI contract and mutation detection",
         detail);
  }

  if (g_failures == 0) {
    std::printf("acceptance: all %d criteria passed\n", g_index);
    return 0;
  }
  std::printf("acceptance: %d of %d criteria FAILED\n", g_failures, g_index);
  return 1;
}
