#include "s4cover/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace s4cover {

bool Subgroup::contains(const DihedralElement& e) const {
  return std::find(elements.begin(), elements.end(), e) != elements.end();
}

Subgroup subgroup_closure(const std::vector<DihedralElement>& generators,
                          std::string name) {
  std::vector<DihedralElement> els{DihedralElement::identity()};
  const auto known = [&els](const DihedralElement& e) {
    return std::find(els.begin(), els.end(), e) != els.end();
  };
  for (const auto& g : generators)
    if (!known(g)) els.push_back(g);
  // Product-closure fixpoint; inverse-closure follows in a finite group.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = els.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const DihedralElement e = els[i] * els[j];
        if (!known(e)) {
          els.push_back(e);
          grew = true;
        }
      }
  }
  std::sort(els.begin(), els.end());
  return Subgroup{std::move(els), std::move(name)};
}

Subgroup subgroup_trivial() { return subgroup_closure({}, "1"); }
Subgroup subgroup_sigma2() {
  return subgroup_closure({DihedralElement::make(2, 0)}, "<s2>");
}
Subgroup subgroup_tau() {
  return subgroup_closure({DihedralElement::tau()}, "<t>");
}
Subgroup subgroup_sigma_tau() {
  return subgroup_closure({DihedralElement::make(1, 1)}, "<st>");
}
Subgroup subgroup_tau_sigma() {
  // tau·sigma = sigma⁻¹·tau = s3t in normal form.
  return subgroup_closure({DihedralElement::make(3, 1)}, "<ts>");
}
Subgroup subgroup_sigma() {
  return subgroup_closure({DihedralElement::sigma()}, "<s>");
}
Subgroup subgroup_reflections() {
  return subgroup_closure(
      {DihedralElement::make(1, 1), DihedralElement::make(3, 1)}, "<st,ts>");
}
Subgroup subgroup_sigma2_tau() {
  return subgroup_closure({DihedralElement::make(2, 0), DihedralElement::tau()},
                          "<s2,t>");
}
Subgroup dihedral_full() {
  return subgroup_closure({DihedralElement::sigma(), DihedralElement::tau()},
                          "<s,t>");
}

std::vector<PairS2> orbit_of(const PairS2& p, const Subgroup& g, double tol) {
  std::vector<PairS2> out;
  for (const auto& e : g.elements) {
    const PairS2 q = dihedral_apply(e, p);
    bool seen = false;
    for (const auto& r : out)
      if (pair_eq(q, r, tol)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(q);
  }
  return out;
}

double orbit_distance(const PairS2& p, const PairS2& q, const Subgroup& g) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : g.elements)
    best = std::min(best, pair_distance(dihedral_apply(e, p), q));
  return best;
}

bool eq_mod(const PairS2& p, const PairS2& q, const Subgroup& g, double tol) {
  return orbit_distance(p, q, g) <= tol;
}

namespace {

std::array<long long, 6> rounded_key(const PairS2& p, double grid) {
  std::array<long long, 6> k;
  for (std::size_t i = 0; i < 3; ++i) {
    k[i] = llround(p.first[i] / grid);
    k[3 + i] = llround(p.second[i] / grid);
  }
  return k;
}

std::array<double, 6> flat_coords(const PairS2& p) {
  return {p.first[0],  p.first[1],  p.first[2],
          p.second[0], p.second[1], p.second[2]};
}

}  // namespace

PairS2 canonical_rep(const PairS2& p, const Subgroup& g, double grid) {
  PairS2 best = p;
  auto best_key = rounded_key(p, grid);
  auto best_exact = flat_coords(p);
  for (const auto& e : g.elements) {
    const PairS2 q = dihedral_apply(e, p);
    const auto key = rounded_key(q, grid);
    const auto exact = flat_coords(q);
    if (key < best_key || (key == best_key && exact < best_exact)) {
      best = q;
      best_key = key;
      best_exact = exact;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Lattice construction.
// ---------------------------------------------------------------------------

namespace {

RealProj<2> rp2_class(const S2Point& s) {
  return RealProj<2>({s[0], s[1], s[2]});
}

double sub_distance(const QuotientRep& a, const QuotientRep& b,
                    const Subgroup& g) {
  return orbit_distance(a.rep, b.rep, g);
}

std::vector<QuotientNode> build_nodes() {
  std::vector<QuotientNode> nodes;

  nodes.push_back(
      {NodeId::SphereSquare, "S2xS2", subgroup_trivial(),
       [](const PairS2& p) { return ModelValue{p}; },
       [](const ModelValue& a, const ModelValue& b) {
         return pair_distance(std::get<PairS2>(a), std::get<PairS2>(b));
       }});

  nodes.push_back(
      {NodeId::S2xRP2, "S2xRP2", subgroup_sigma_tau(),
       [](const PairS2& p) {
         return ModelValue{std::make_pair(p.first, rp2_class(p.second))};
       },
       [](const ModelValue& a, const ModelValue& b) {
         const auto& x = std::get<std::pair<S2Point, RealProj<2>>>(a);
         const auto& y = std::get<std::pair<S2Point, RealProj<2>>>(b);
         return std::max(sphere_distance(x.first, y.first),
                         chordal_distance(x.second, y.second));
       }});

  nodes.push_back(
      {NodeId::RP2xS2, "RP2xS2", subgroup_tau_sigma(),
       [](const PairS2& p) {
         return ModelValue{std::make_pair(rp2_class(p.first), p.second)};
       },
       [](const ModelValue& a, const ModelValue& b) {
         const auto& x = std::get<std::pair<RealProj<2>, S2Point>>(a);
         const auto& y = std::get<std::pair<RealProj<2>, S2Point>>(b);
         return std::max(chordal_distance(x.first, y.first),
                         sphere_distance(x.second, y.second));
       }});

  {
    Subgroup sub = subgroup_sigma2();
    nodes.push_back(
        {NodeId::ModSigma2, "S2xS2/<s2>", sub,
         [](const PairS2& p) { return ModelValue{QuotientRep{p}}; },
         [sub](const ModelValue& a, const ModelValue& b) {
           return sub_distance(std::get<QuotientRep>(a),
                               std::get<QuotientRep>(b), sub);
         }});
  }

  nodes.push_back(
      {NodeId::CP2, "CP2", subgroup_tau(),
       [](const PairS2& p) { return ModelValue{lambda_map(p)}; },
       [](const ModelValue& a, const ModelValue& b) {
         return chordal_distance(std::get<CplxProj<2>>(a),
                                 std::get<CplxProj<2>>(b));
       }});

  nodes.push_back(
      {NodeId::RP2xRP2, "RP2xRP2", subgroup_reflections(),
       [](const PairS2& p) {
         return ModelValue{
             std::make_pair(rp2_class(p.first), rp2_class(p.second))};
       },
       [](const ModelValue& a, const ModelValue& b) {
         const auto& x = std::get<std::pair<RealProj<2>, RealProj<2>>>(a);
         const auto& y = std::get<std::pair<RealProj<2>, RealProj<2>>>(b);
         return std::max(chordal_distance(x.first, y.first),
                         chordal_distance(x.second, y.second));
       }});

  {
    Subgroup sub = subgroup_sigma();
    nodes.push_back(
        {NodeId::ModSigma, "S2xS2/<s>", sub,
         [](const PairS2& p) { return ModelValue{QuotientRep{p}}; },
         [sub](const ModelValue& a, const ModelValue& b) {
           return sub_distance(std::get<QuotientRep>(a),
                               std::get<QuotientRep>(b), sub);
         }});
  }

  nodes.push_back(
      {NodeId::S4, "S4", subgroup_sigma2_tau(),
       [](const PairS2& p) { return ModelValue{g_tilde(p)}; },
       [](const ModelValue& a, const ModelValue& b) {
         return sphere_distance(std::get<S4Point>(a), std::get<S4Point>(b));
       }});

  nodes.push_back(
      {NodeId::RP4, "RP4", dihedral_full(),
       [](const PairS2& p) { return ModelValue{h_map(p)}; },
       [](const ModelValue& a, const ModelValue& b) {
         return chordal_distance(std::get<RealProj<4>>(a),
                                 std::get<RealProj<4>>(b));
       }});

  return nodes;
}

std::vector<LatticeEdge> build_edges() {
  std::vector<LatticeEdge> edges;

  const auto top_pair = [](const ModelValue& v) {
    return std::get<PairS2>(v);
  };

  // Top-level covers out of S²×S².
  edges.push_back({NodeId::SphereSquare, NodeId::S2xRP2, "",
                   [top_pair](const ModelValue& v) {
                     const PairS2 p = top_pair(v);
                     return ModelValue{
                         std::make_pair(p.first, rp2_class(p.second))};
                   }});
  edges.push_back({NodeId::SphereSquare, NodeId::RP2xS2, "",
                   [top_pair](const ModelValue& v) {
                     const PairS2 p = top_pair(v);
                     return ModelValue{
                         std::make_pair(rp2_class(p.first), p.second)};
                   }});
  edges.push_back({NodeId::SphereSquare, NodeId::ModSigma2, "",
                   [top_pair](const ModelValue& v) {
                     return ModelValue{QuotientRep{top_pair(v)}};
                   }});
  edges.push_back({NodeId::SphereSquare, NodeId::CP2, "lambda",
                   [top_pair](const ModelValue& v) {
                     return ModelValue{lambda_map(top_pair(v))};
                   }});

  // Second level, down to RP²×RP² and S²×S²/<s>.
  edges.push_back({NodeId::S2xRP2, NodeId::RP2xRP2, "",
                   [](const ModelValue& v) {
                     const auto& x =
                         std::get<std::pair<S2Point, RealProj<2>>>(v);
                     return ModelValue{
                         std::make_pair(rp2_class(x.first), x.second)};
                   }});
  edges.push_back({NodeId::RP2xS2, NodeId::RP2xRP2, "",
                   [](const ModelValue& v) {
                     const auto& x =
                         std::get<std::pair<RealProj<2>, S2Point>>(v);
                     return ModelValue{
                         std::make_pair(x.first, rp2_class(x.second))};
                   }});
  edges.push_back({NodeId::ModSigma2, NodeId::RP2xRP2, "",
                   [](const ModelValue& v) {
                     const PairS2& p = std::get<QuotientRep>(v).rep;
                     return ModelValue{std::make_pair(rp2_class(p.first),
                                                      rp2_class(p.second))};
                   }});
  edges.push_back({NodeId::ModSigma2, NodeId::ModSigma, "",
                   [](const ModelValue& v) {
                     return ModelValue{QuotientRep{std::get<QuotientRep>(v).rep}};
                   }});

  // Branched covers onto S⁴.
  edges.push_back({NodeId::ModSigma2, NodeId::S4, "g+",
                   [](const ModelValue& v) {
                     return ModelValue{g_plus(std::get<QuotientRep>(v).rep)};
                   }});
  edges.push_back({NodeId::CP2, NodeId::S4, "G",
                   [](const ModelValue& v) {
                     return ModelValue{big_g(std::get<CplxProj<2>>(v))};
                   }});

  // Bottom level, down to RP⁴.
  edges.push_back({NodeId::RP2xRP2, NodeId::RP4, "g",
                   [](const ModelValue& v) {
                     const auto& x =
                         std::get<std::pair<RealProj<2>, RealProj<2>>>(v);
                     return ModelValue{g_real(x.first, x.second)};
                   }});
  edges.push_back({NodeId::ModSigma, NodeId::RP4, "h",
                   [](const ModelValue& v) {
                     return ModelValue{h_map(std::get<QuotientRep>(v).rep)};
                   }});
  edges.push_back({NodeId::S4, NodeId::RP4, "",
                   [](const ModelValue& v) {
                     return ModelValue{
                         RealProj<4>(std::get<S4Point>(v).coords())};
                   }});

  return edges;
}

void extend_paths(NodeId at, std::vector<const LatticeEdge*>& prefix,
                  std::map<NodeId, std::vector<std::vector<const LatticeEdge*>>>&
                      out) {
  out[at].push_back(prefix);
  for (const auto& e : lattice_edges()) {
    if (e.from != at) continue;
    prefix.push_back(&e);
    extend_paths(e.to, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<QuotientNode>& lattice_nodes() {
  static const std::vector<QuotientNode> nodes = build_nodes();
  return nodes;
}

const QuotientNode& lattice_node(NodeId id) {
  for (const auto& n : lattice_nodes())
    if (n.id == id) return n;
  throw Error("lattice_node: unknown node");
}

const std::vector<LatticeEdge>& lattice_edges() {
  static const std::vector<LatticeEdge> edges = build_edges();
  return edges;
}

const std::vector<std::vector<const LatticeEdge*>>& lattice_paths(
    NodeId target) {
  static const auto all = [] {
    std::map<NodeId, std::vector<std::vector<const LatticeEdge*>>> out;
    std::vector<const LatticeEdge*> prefix;
    extend_paths(NodeId::SphereSquare, prefix, out);
    return out;
  }();
  const auto it = all.find(target);
  if (it == all.end()) throw Error("lattice_paths: unknown node");
  return it->second;
}

ModelValue evaluate_path(const std::vector<const LatticeEdge*>& path,
                         const PairS2& p) {
  ModelValue v{p};
  for (const LatticeEdge* e : path) v = e->apply(v);
  return v;
}

}  // namespace s4cover
