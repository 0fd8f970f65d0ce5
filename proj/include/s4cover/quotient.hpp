#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "s4cover/maps.hpp"
#include "s4cover/projective.hpp"
#include "s4cover/sphere.hpp"

namespace s4cover {

// ---------------------------------------------------------------------------
// Subgroups of the dihedral group <sigma, tau>.
// ---------------------------------------------------------------------------

struct Subgroup {
  std::vector<DihedralElement> elements;  // sorted, closed, inverse-closed
  std::string name;

  bool contains(const DihedralElement& e) const;
  std::size_t order() const { return elements.size(); }
};

/// Smallest subgroup containing the generators (and the identity).
Subgroup subgroup_closure(const std::vector<DihedralElement>& generators,
                          std::string name = "");

Subgroup subgroup_trivial();
Subgroup subgroup_sigma2();       // {1, s2}
Subgroup subgroup_tau();          // {1, t}
Subgroup subgroup_sigma_tau();    // {1, st}   (acts as id × A)
Subgroup subgroup_tau_sigma();    // {1, s3t}  (acts as A × id)
Subgroup subgroup_sigma();        // {1, s, s2, s3}
Subgroup subgroup_reflections();  // {1, st, s3t, s2}  = <st, ts>
Subgroup subgroup_sigma2_tau();   // {1, s2, t, s2t}
Subgroup dihedral_full();

// ---------------------------------------------------------------------------
// Orbits and quotient-space equality.
// ---------------------------------------------------------------------------

/// Distinct members of the orbit of p under G (deduplicated within tol).
std::vector<PairS2> orbit_of(const PairS2& p, const Subgroup& g,
                             double tol = 1e-9);

/// True iff some element of G carries p within tol of q. Equality in the
/// quotient is orbit search, not canonical-representative comparison, so
/// there are no tolerance cliffs at lexicographic ties.
bool eq_mod(const PairS2& p, const PairS2& q, const Subgroup& g, double tol);

/// Smallest distance between the G-orbit of p and q.
double orbit_distance(const PairS2& p, const PairS2& q, const Subgroup& g);

/// Orbit member minimal in the lexicographic order of grid-rounded
/// coordinates (exact coordinates break ties). Intended for hashing and
/// export only; near grid boundaries the choice is tolerance-sensitive.
PairS2 canonical_rep(const PairS2& p, const Subgroup& g, double grid = 1e-9);

// ---------------------------------------------------------------------------
// The lattice of quotients of S²×S².
//
// Nine nodes, one per subgroup; the edge set is exactly the arrows of the
// quotient diagram. Each node carries a representative-level model map into
// a concrete model space, each edge a concrete map between models, and all
// composites from the top must agree.
// ---------------------------------------------------------------------------

enum class NodeId {
  SphereSquare,  // S²×S²            / {1}
  S2xRP2,        // S²×RP²           / <st>
  RP2xS2,        // RP²×S²           / <ts>
  ModSigma2,     // S²×S²/<s2>       (abstract quotient)
  CP2,           // CP²              / <t>     via lambda
  RP2xRP2,       // RP²×RP²          / <st,ts>
  ModSigma,      // S²×S²/<s>        (abstract quotient)
  S4,            // S⁴               / <s2,t>  via g~
  RP4,           // RP⁴              / <s,t>   via h
};

/// Point of an abstract quotient node, stored by representative; equality is
/// orbit search under the node's subgroup.
struct QuotientRep {
  PairS2 rep;
};

using ModelValue =
    std::variant<PairS2, std::pair<S2Point, RealProj<2>>,
                 std::pair<RealProj<2>, S2Point>,
                 std::pair<RealProj<2>, RealProj<2>>, CplxProj<2>, S4Point,
                 RealProj<4>, QuotientRep>;

struct QuotientNode {
  NodeId id;
  std::string name;
  Subgroup subgroup;
  std::function<ModelValue(const PairS2&)> model_map;
  std::function<double(const ModelValue&, const ModelValue&)> model_distance;
};

struct LatticeEdge {
  NodeId from;
  NodeId to;
  std::string label;  // lambda / g / g+ / G / h where the diagram names one
  std::function<ModelValue(const ModelValue&)> apply;
};

const std::vector<QuotientNode>& lattice_nodes();
const QuotientNode& lattice_node(NodeId id);
const std::vector<LatticeEdge>& lattice_edges();

/// Every edge path from the top node (S²×S²) to `target`, in a fixed order.
const std::vector<std::vector<const LatticeEdge*>>& lattice_paths(NodeId target);

/// Evaluates a path starting from the pair p at the top node.
ModelValue evaluate_path(const std::vector<const LatticeEdge*>& path,
                         const PairS2& p);

}  // namespace s4cover
