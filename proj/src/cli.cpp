#include "s4cover/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _WIN32
#else
#include <unistd.h>
#endif

#include "s4cover/errors.hpp"
#include "s4cover/fibers.hpp"
#include "s4cover/pointjson.hpp"
#include "s4cover/sampling.hpp"
#include "s4cover/suites.hpp"

namespace s4cover {

namespace {

bool use_color(std::ostream& err) {
  if (std::getenv("NO_COLOR") != nullptr) return false;
#ifdef _WIN32
  return false;
#else
  return &err == &std::cerr && isatty(fileno(stderr));
#endif
}

std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

// ---------------------------------------------------------------------------
// Map registry for eval / fiber / sample map-graph.
// ---------------------------------------------------------------------------

struct MapEntry {
  Space domain;
  Space codomain;
  std::function<PointJson(const PointJson&)> eval;
};

const std::map<std::string, MapEntry>& eval_registry() {
  static const std::map<std::string, MapEntry> reg = [] {
    std::map<std::string, MapEntry> m;
    m["gamma"] = {Space::S2, Space::CP1, [](const PointJson& p) {
                    return PointJson::of_cp1(gamma(p.as_s2()));
                  }};
    m["gamma_inv"] = {Space::CP1, Space::S2, [](const PointJson& p) {
                        return PointJson::of(gamma_inv(p.as_cp1()));
                      }};
    m["antipodal_cp1"] = {Space::CP1, Space::CP1, [](const PointJson& p) {
                            return PointJson::of_cp1(antipodal_cp1(p.as_cp1()));
                          }};
    m["sigma"] = {Space::PairS2W, Space::PairS2W, [](const PointJson& p) {
                    return PointJson::of(sigma_apply(p.as_pair_s2()));
                  }};
    m["tau"] = {Space::PairS2W, Space::PairS2W, [](const PointJson& p) {
                  return PointJson::of(tau_apply(p.as_pair_s2()));
                }};
    m["f_hat"] = {Space::PairCP1, Space::CP2, [](const PointJson& p) {
                    const auto [a, b] = p.as_pair_cp1();
                    return PointJson::of_cp2(f_hat(a, b));
                  }};
    m["lambda"] = {Space::PairS2W, Space::CP2, [](const PointJson& p) {
                     return PointJson::of_cp2(lambda_map(p.as_pair_s2()));
                   }};
    m["c2"] = {Space::CP2, Space::CP2, [](const PointJson& p) {
                 return PointJson::of_cp2(conj_cp(p.as_cp2()));
               }};
    m["theta"] = {Space::CP2, Space::CP2, [](const PointJson& p) {
                    return PointJson::of_cp2(theta(p.as_cp2()));
                  }};
    m["theta_inv"] = {Space::CP2, Space::CP2, [](const PointJson& p) {
                        return PointJson::of_cp2(theta_inv(p.as_cp2()));
                      }};
    m["g"] = {Space::PairRP2, Space::RP4, [](const PointJson& p) {
                const auto [a, b] = p.as_pair_rp2();
                return PointJson::of_rp4(g_real(a, b));
              }};
    m["g_tilde"] = {Space::PairS2W, Space::S4, [](const PointJson& p) {
                      return PointJson::of(g_tilde(p.as_pair_s2()));
                    }};
    m["G"] = {Space::CP2, Space::S4, [](const PointJson& p) {
                return PointJson::of(big_g(p.as_cp2()));
              }};
    m["eth"] = {Space::CP2, Space::S4, [](const PointJson& p) {
                  return PointJson::of(eth(p.as_cp2()));
                }};
    m["g_plus"] = {Space::PairS2W, Space::S4, [](const PointJson& p) {
                     return PointJson::of(g_plus(p.as_pair_s2()));
                   }};
    m["h"] = {Space::PairS2W, Space::RP4, [](const PointJson& p) {
                return PointJson::of_rp4(h_map(p.as_pair_s2()));
              }};
    m["eta"] = {Space::C3, Space::R6, [](const PointJson& p) {
                  return PointJson::of_r6(eta_kuiper(p.as_c3()));
                }};
    m["s3_cover"] = {Space::S3, Space::PairS2W, [](const PointJson& p) {
                       return PointJson::of(s3_double_cover(p.as_quaternion()));
                     }};
    return m;
  }();
  return reg;
}

const MapEntry& lookup_map(const std::string& name) {
  const auto it = eval_registry().find(name);
  if (it == eval_registry().end())
    throw UnknownMap("unknown map '" + name + "'");
  return it->second;
}

PointJson random_point(Space space, SubstreamRng& rng) {
  switch (space) {
    case Space::S2:
      return PointJson::of(random_sphere<2>(rng));
    case Space::S3:
      return PointJson::of(random_unit_quaternion(rng));
    case Space::S4:
      return PointJson::of(random_sphere<4>(rng));
    case Space::CP1:
      return PointJson::of_cp1(random_cproj<1>(rng));
    case Space::CP2:
      return PointJson::of_cp2(random_cproj<2>(rng));
    case Space::RP2:
      return PointJson::of_rp2(random_rproj<2>(rng));
    case Space::RP4:
      return PointJson::of_rp4(random_rproj<4>(rng));
    case Space::C3:
      return PointJson::of_c3(random_unit_c3(rng));
    case Space::PairS2W:
      return PointJson::of(random_pair_s2(rng));
    case Space::PairCP1: {
      PointJson out;
      out.space = Space::PairCP1;
      const auto a = random_cproj<1>(rng).coords();
      const auto b = random_cproj<1>(rng).coords();
      out.complexes = {a[0], a[1], b[0], b[1]};
      return out;
    }
    case Space::PairRP2: {
      PointJson out;
      out.space = Space::PairRP2;
      const auto a = random_rproj<2>(rng).coords();
      const auto b = random_rproj<2>(rng).coords();
      out.reals = {a[0], a[1], a[2], b[0], b[1], b[2]};
      return out;
    }
    case Space::C2: {
      PointJson out;
      out.space = Space::C2;
      out.complexes = {gaussian_complex(rng), gaussian_complex(rng)};
      return out;
    }
    case Space::S5: {
      PointJson out;
      out.space = Space::S5;
      const auto p = random_sphere<5>(rng);
      out.reals.assign(p.coords().begin(), p.coords().end());
      return out;
    }
    default:
      throw UsageError("cannot sample this space");
  }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const VerifyCmd& cmd, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (cmd.suite == "all") {
    ids = suite_names();
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), cmd.suite) == names.end())
      throw UnknownSuite("unknown suite '" + cmd.suite + "'");
    ids.push_back(cmd.suite);
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cmd.output.empty()) {
    file.open(cmd.output);
    if (!file) throw UsageError("cannot open output file " + cmd.output);
    sink = &file;
  }

  const bool color = use_color(err);
  const char* green = color ? "\x1b[32m" : "";
  const char* red = color ? "\x1b[31m" : "";
  const char* reset = color ? "\x1b[0m" : "";

  Tolerance tol;
  tol.eq_tol = cmd.tol;
  tol.suite_tol = cmd.tol;
  tol.validate();

  bool all_pass = true;
  for (const auto& id : ids) {
    const std::uint64_t n =
        cmd.samples >= 0 ? static_cast<std::uint64_t>(cmd.samples)
                         : default_suite_samples(id);
    const Report rep = run_suite(id, n, cmd.seed, tol);
    (*sink) << rep.to_json_line() << "\n";
    err << (rep.pass ? green : red) << (rep.pass ? "ok  " : "FAIL") << reset
        << " " << id << "  samples=" << n << "  max_error=" << rep.max_error
        << "  tolerance=" << rep.tolerance << "\n";
    all_pass = all_pass && rep.pass;
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int run_eval(const EvalCmd& cmd, std::ostream& out) {
  const MapEntry& entry = lookup_map(cmd.map);
  const PointJson in = PointJson::parse(cmd.point);
  if (in.space != entry.domain)
    throw SpaceMismatch(std::string("map ") + cmd.map + " expects a point of " +
                        space_name(entry.domain) + ", got " +
                        space_name(in.space));
  const PointJson result = entry.eval(in);

  if (!cmd.output.empty()) {
    std::ofstream file(cmd.output);
    if (!file) throw UsageError("cannot open output file " + cmd.output);
    file << result.serialize() << "\n";
  } else {
    out << result.serialize() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fiber
// ---------------------------------------------------------------------------

struct Preimage {
  PointJson point;
  int multiplicity;
  double forward_error;
};

int run_fiber(const FiberCmd& cmd, std::ostream& out) {
  const PointJson in = PointJson::parse(cmd.point);
  std::vector<Preimage> pre;
  bool on_branch = false;

  try {
    if (cmd.map == "f_hat") {
      const CplxProj<2> target = in.as_cp2();
      const FhatFiber fb = fiber_fhat(target, cmd.tol);
      const double fwd = chordal_distance(f_hat(fb.first, fb.second), target);
      on_branch = fb.on_branch;
      pre.push_back({PointJson::of_cp1(fb.first), fb.on_branch ? 2 : 1, fwd});
      if (!fb.on_branch)
        pre.push_back({PointJson::of_cp1(fb.second), 1, fwd});
    } else if (cmd.map == "lambda") {
      const CplxProj<2> target = in.as_cp2();
      const LambdaFiber lf = fiber_lambda(target, cmd.tol);
      const double fwd = chordal_distance(lambda_map(lf.pair), target);
      on_branch = lf.on_branch;
      pre.push_back({PointJson::of(lf.pair), lf.on_branch ? 2 : 1, fwd});
      if (!lf.on_branch)
        pre.push_back({PointJson::of(tau_apply(lf.pair)), 1, fwd});
    } else if (cmd.map == "g") {
      const RealProj<4> target = in.as_rp4();
      const auto [a, b] = fiber_g_real(target, cmd.tol);
      const double fwd = chordal_distance(g_real(a, b), target);
      const bool same = chordal_distance(a, b) <= 1e-6;
      on_branch = same;
      const auto as_pair = [](const RealProj<2>& x, const RealProj<2>& y) {
        PointJson p;
        p.space = Space::PairRP2;
        const auto cx = x.canonical().coords();
        const auto cy = y.canonical().coords();
        p.reals = {cx[0], cx[1], cx[2], cy[0], cy[1], cy[2]};
        return p;
      };
      pre.push_back({as_pair(a, b), same ? 2 : 1, fwd});
      if (!same) pre.push_back({as_pair(b, a), 1, fwd});
    } else if (cmd.map == "g_tilde") {
      const S4Point target = in.as_s4();
      const GTildeFiber gf = fiber_g_tilde(target, cmd.tol);
      on_branch = gf.on_branch;
      for (const auto& p : gf.pairs)
        pre.push_back({PointJson::of(p), gf.on_branch ? 2 : 1,
                       sphere_distance(g_tilde(p), target)});
    } else if (cmd.map == "G") {
      const S4Point target = in.as_s4();
      const BigGFiber bf = fiber_big_g(target, cmd.tol);
      on_branch = bf.on_branch;
      for (const auto& z : bf.points)
        pre.push_back({PointJson::of_cp2(z), bf.on_branch ? 2 : 1,
                       sphere_distance(big_g(z), target)});
    } else {
      throw UnknownMap("fiber solver covers f_hat, lambda, g, g_tilde, G; "
                       "got '" + cmd.map + "'");
    }
  } catch (const DegenerateFiber& e) {
    nlohmann::ordered_json j;
    j["error"] = "DegenerateFiber";
    j["map"] = cmd.map;
    j["message"] = e.what();
    out << j.dump() << "\n";
    return 1;
  }

  // Forward verification gate: nothing is emitted that does not map back.
  for (const auto& p : pre)
    if (!(p.forward_error <= std::max(cmd.tol, 1e-8))) {
      nlohmann::ordered_json j;
      j["error"] = "ForwardCheckFailed";
      j["map"] = cmd.map;
      j["forward_error"] = p.forward_error;
      out << j.dump() << "\n";
      return 1;
    }

  nlohmann::ordered_json j;
  j["map"] = cmd.map;
  j["target"] = nlohmann::ordered_json::parse(in.serialize());
  j["on_branch"] = on_branch;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : pre) {
    nlohmann::ordered_json e;
    e["point"] = nlohmann::ordered_json::parse(p.point.serialize());
    e["multiplicity"] = p.multiplicity;
    e["forward_error"] = p.forward_error;
    arr.push_back(e);
  }
  j["preimages"] = arr;

  if (!cmd.output.empty()) {
    std::ofstream file(cmd.output);
    if (!file) throw UsageError("cannot open output file " + cmd.output);
    file << j.dump() << "\n";
  } else {
    out << j.dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

std::vector<std::string> space_columns(Space s, const std::string& prefix) {
  std::vector<std::string> cols;
  const std::size_t n = space_arity(s);
  if (space_is_complex(s)) {
    for (std::size_t i = 0; i < n; ++i) {
      cols.push_back(prefix + "z" + std::to_string(i) + "_re");
      cols.push_back(prefix + "z" + std::to_string(i) + "_im");
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      cols.push_back(prefix + "x" + std::to_string(i));
  }
  return cols;
}

std::vector<double> flatten(const PointJson& p) {
  if (space_is_complex(p.space)) {
    std::vector<double> out;
    for (const auto& c : p.complexes) {
      out.push_back(c.real());
      out.push_back(c.imag());
    }
    return out;
  }
  return p.reals;
}

int run_sample(const SampleCmd& cmd, std::ostream& out) {
  std::string space_label;
  std::vector<std::string> cols;
  // Row generator: one PointJson per index for single-space targets, or an
  // (input, image) pair for map-graph.
  std::function<std::vector<PointJson>(std::uint64_t)> row;

  if (cmd.target == "branch-set-G") {
    // Images under G of the conic [u^2 : 2uv : v^2] = f_hat(diagonal).
    space_label = "S4";
    cols = space_columns(Space::S4, "");
    row = [&cmd](std::uint64_t i) {
      SubstreamRng rng(cmd.seed, i);
      const CplxProj<1> p = random_cproj<1>(rng);
      return std::vector<PointJson>{PointJson::of(big_g(f_hat(p, p)))};
    };
  } else if (cmd.target == "branch-set-eth") {
    // Images under eth of real points of CP2.
    space_label = "S4";
    cols = space_columns(Space::S4, "");
    row = [&cmd](std::uint64_t i) {
      SubstreamRng rng(cmd.seed, i);
      const auto r = random_rproj<2>(rng).coords();
      return std::vector<PointJson>{
          PointJson::of(eth(cp2(r[0], r[1], r[2])))};
    };
  } else if (cmd.target == "c-level") {
    if (!(cmd.x >= -1.0 && cmd.x <= 1.0))
      throw UsageError("--x must lie in [-1, 1]");
    space_label = "PAIR_S2";
    cols = space_columns(Space::PairS2W, "");
    row = [&cmd](std::uint64_t i) {
      SubstreamRng rng(cmd.seed, i);
      return std::vector<PointJson>{PointJson::of(sample_c_level(cmd.x, rng))};
    };
  } else if (cmd.target == "map-graph") {
    if (cmd.map.empty())
      throw UsageError("map-graph needs --map <name>");
    const MapEntry& entry = lookup_map(cmd.map);
    space_label = std::string(space_name(entry.domain)) + "->" +
                  space_name(entry.codomain);
    cols = space_columns(entry.domain, "in_");
    const auto out_cols = space_columns(entry.codomain, "out_");
    cols.insert(cols.end(), out_cols.begin(), out_cols.end());
    row = [&cmd, &entry](std::uint64_t i) {
      SubstreamRng rng(cmd.seed, i);
      const PointJson in = random_point(entry.domain, rng);
      return std::vector<PointJson>{in, entry.eval(in)};
    };
  } else {
    throw UsageError("unknown sample target '" + cmd.target + "'");
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cmd.output.empty()) {
    file.open(cmd.output);
    if (!file) throw UsageError("cannot open output file " + cmd.output);
    sink = &file;
  }

  if (cmd.format == "csv") {
    (*sink) << "# space=" << space_label << " cols=";
    for (std::size_t i = 0; i < cols.size(); ++i)
      (*sink) << cols[i] << (i + 1 < cols.size() ? "," : "\n");
    for (std::uint64_t i = 0; i < cmd.count; ++i) {
      const auto points = row(i);
      std::vector<double> values;
      for (const auto& p : points) {
        const auto f = flatten(p);
        values.insert(values.end(), f.begin(), f.end());
      }
      for (std::size_t k = 0; k < values.size(); ++k)
        (*sink) << fmt_g17(values[k]) << (k + 1 < values.size() ? "," : "\n");
    }
  } else if (cmd.format == "json") {
    for (std::uint64_t i = 0; i < cmd.count; ++i) {
      const auto points = row(i);
      if (points.size() == 1) {
        (*sink) << points[0].serialize() << "\n";
      } else {
        nlohmann::ordered_json j;
        j["input"] = nlohmann::ordered_json::parse(points[0].serialize());
        j["image"] = nlohmann::ordered_json::parse(points[1].serialize());
        (*sink) << j.dump() << "\n";
      }
    }
  } else {
    throw UsageError("unknown format '" + cmd.format + "'");
  }
  return 0;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Explicit maps between the quotients of S2 x S2: evaluation, "
               "closed-form fibers, point clouds, and randomized "
               "verification suites."};
  app.name("s4cover");
  app.require_subcommand(1);

  // Global flags, accepted on any subcommand via fallthrough.
  std::uint64_t seed = 7;
  std::int64_t samples = -1;
  double tol = 1e-9;
  std::string format = "csv";
  std::string output;
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", samples, "Samples per suite");
  app.add_option("--tol", tol, "Tolerance")->capture_default_str();
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write results to a file");

  VerifyCmd verify;
  EvalCmd eval;
  FiberCmd fiber;
  SampleCmd sample;

  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->fallthrough();
  v->add_option("--suite", verify.suite, "Suite name or 'all'")
      ->capture_default_str();

  auto* e = app.add_subcommand("eval", "Evaluate a named map at a point");
  e->fallthrough();
  e->add_option("--map", eval.map, "Map name")->required();
  e->add_option("--point", eval.point, "Point as JSON")->required();

  auto* f = app.add_subcommand("fiber", "Compute the fiber over a point");
  f->fallthrough();
  f->add_option("--map", fiber.map, "One of f_hat, lambda, g, g_tilde, G")
      ->required();
  f->add_option("--point", fiber.point, "Target point as JSON")->required();

  auto* s = app.add_subcommand("sample", "Export a point cloud");
  s->fallthrough();
  s->add_option("--target", sample.target,
                "branch-set-G | branch-set-eth | c-level | map-graph")
      ->required();
  s->add_option("--map", sample.map, "Map name for map-graph");
  s->add_option("--x", sample.x, "Level in [-1,1] for c-level")
      ->capture_default_str();
  s->add_option("--count", sample.count, "Number of points")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return HelpCmd{app.help()};
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }

  if (v->parsed()) {
    verify.samples = samples;
    verify.seed = seed;
    verify.tol = tol;
    verify.output = output;
    return verify;
  }
  if (e->parsed()) {
    eval.output = output;
    return eval;
  }
  if (f->parsed()) {
    fiber.tol = tol;
    fiber.output = output;
    return fiber;
  }
  if (s->parsed()) {
    sample.seed = seed;
    sample.format = format;
    sample.output = output;
    return sample;
  }
  throw UsageError("expected a subcommand: verify | eval | fiber | sample");
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (const auto* h = std::get_if<HelpCmd>(&cmd)) {
    out << h->text;
    return 0;
  }
  if (const auto* v = std::get_if<VerifyCmd>(&cmd))
    return run_verify(*v, out, err);
  if (const auto* e = std::get_if<EvalCmd>(&cmd)) return run_eval(*e, out);
  if (const auto* f = std::get_if<FiberCmd>(&cmd)) return run_fiber(*f, out);
  return run_sample(std::get<SampleCmd>(cmd), out);
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const Command cmd = parse_args(args);
    return run_command(cmd, std::cout, std::cerr);
  } catch (const DegenerateFiber& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // Usage-level problems: unknown names, malformed points, bad spaces.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace s4cover
