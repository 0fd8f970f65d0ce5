#include <doctest.h>

#include <algorithm>

#include "s4cover/quotient.hpp"
#include "s4cover/sampling.hpp"

using namespace s4cover;

TEST_CASE("subgroup closures have the expected orders") {
  CHECK(subgroup_closure({}).order() == 1);
  CHECK(subgroup_sigma().order() == 4);
  CHECK(subgroup_tau().order() == 2);
  CHECK(subgroup_sigma2().order() == 2);
  CHECK(subgroup_sigma_tau().order() == 2);
  CHECK(subgroup_tau_sigma().order() == 2);
  CHECK(subgroup_sigma2_tau().order() == 4);
  CHECK(dihedral_full().order() == 8);

  // <st, ts> has order 4 and contains sigma^2 = st · ts.
  const Subgroup refl = subgroup_reflections();
  CHECK(refl.order() == 4);
  CHECK(refl.contains(DihedralElement::make(2, 0)));
}

TEST_CASE("subgroups are closed under products and inverses") {
  const Subgroup subs[] = {subgroup_trivial(),     subgroup_sigma2(),
                           subgroup_tau(),         subgroup_sigma_tau(),
                           subgroup_tau_sigma(),   subgroup_sigma(),
                           subgroup_reflections(), subgroup_sigma2_tau(),
                           dihedral_full()};
  for (const auto& g : subs) {
    CHECK(8 % g.order() == 0);
    for (const auto& e : g.elements) {
      CHECK(g.contains(e.inverse()));
      for (const auto& f : g.elements) CHECK(g.contains(e * f));
    }
  }
}

TEST_CASE("orbits have the expected sizes") {
  SubstreamRng rng(41, 0);
  const PairS2 p = random_pair_s2(rng);
  CHECK(orbit_of(p, dihedral_full()).size() == 8);

  const PairS2 diag{p.first, p.first};
  CHECK(orbit_of(diag, subgroup_tau()).size() == 1);

  const PairS2 s2p = dihedral_apply(DihedralElement::make(2, 0), p);
  CHECK(eq_mod(p, s2p, subgroup_sigma2(), 1e-12));
  CHECK_FALSE(eq_mod(p, s2p, subgroup_trivial(), 1e-6));
}

TEST_CASE("canonical representatives agree across an orbit") {
  for (int k = 0; k < 200; ++k) {
    SubstreamRng rng(42, k);
    const PairS2 p = random_pair_s2(rng);
    const Subgroup g = subgroup_sigma2_tau();
    const PairS2 rep = canonical_rep(p, g);
    for (const auto& e : g.elements) {
      const PairS2 other = canonical_rep(dihedral_apply(e, p), g);
      CHECK(pair_distance(rep, other) <= 1e-12);
    }
  }
}

TEST_CASE("the quotient lattice has nine nodes and the drawn edges") {
  CHECK(lattice_nodes().size() == 9);
  CHECK(lattice_edges().size() == 13);
  // Each edge joins a subgroup to one containing it.
  for (const auto& e : lattice_edges()) {
    const auto& from = lattice_node(e.from);
    const auto& to = lattice_node(e.to);
    CHECK(to.subgroup.order() % from.subgroup.order() == 0);
    for (const auto& el : from.subgroup.elements)
      CHECK(to.subgroup.contains(el));
  }
}

TEST_CASE("model maps are constant on subgroup orbits") {
  for (int k = 0; k < 100; ++k) {
    SubstreamRng rng(43, k);
    const PairS2 p = random_pair_s2(rng);
    for (const auto& node : lattice_nodes()) {
      const ModelValue base = node.model_map(p);
      for (const auto& e : node.subgroup.elements) {
        const ModelValue moved = node.model_map(dihedral_apply(e, p));
        CHECK(node.model_distance(moved, base) <= 1e-9);
      }
    }
  }
}

TEST_CASE("all lattice path composites agree") {
  for (int k = 0; k < 100; ++k) {
    SubstreamRng rng(44, k);
    const PairS2 p = random_pair_s2(rng);
    for (const auto& node : lattice_nodes()) {
      const auto& paths = lattice_paths(node.id);
      CHECK(!paths.empty());
      const ModelValue base = node.model_map(p);
      for (const auto& path : paths)
        CHECK(node.model_distance(evaluate_path(path, p), base) <= 1e-9);
    }
  }
  // The deepest node is reached along several genuinely different routes.
  CHECK(lattice_paths(NodeId::RP4).size() >= 5);
}
