#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "egpkit/preorder.hpp"
#include "egpkit/rational.hpp"
#include "egpkit/submod_fn.hpp"

namespace egp {

// {"a", "b", ...}; n ≤ 20.
GroundSet letters(int n);

// z(S) = ℓ_1 + ... + ℓ_|S| for strictly decreasing levels.
SubmodFn permutahedron(const std::vector<Rational>& levels);
SubmodFn permutahedron(const GroundSet& g, const std::vector<Rational>& levels);

class Matroid {
 public:
  // Validates equicardinality and basis exchange.
  Matroid(GroundSet ground, std::vector<Mask> bases);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& bases() const { return bases_; }
  bool is_basis(Mask b) const;
  Mask loops() const;

 private:
  GroundSet ground_;
  std::vector<Mask> bases_;  // ascending
};

Matroid uniform_matroid(int r, int n);
// Edges given as (label, u, v) over vertices 0..vertices-1; bases are spanning forests.
Matroid graphic_matroid(int vertices, const std::vector<std::tuple<std::string, int, int>>& edges);

SubmodFn matroid_rank(const Matroid& m);
// Minimal elements B ∪ loops; c ∉ B sits above the rest of its circuit in B ∪ {c}.
Preorder basis_vertex_poset(const Matroid& m, Mask basis);

class BuildingSet {
 public:
  BuildingSet(GroundSet ground, std::vector<Mask> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& members() const { return members_; }
  bool has(Mask m) const;
  Partition connected_components() const;  // maximal members

 private:
  GroundSet ground_;
  std::vector<Mask> members_;  // ascending, no duplicates
};

// Connected induced subgraphs of a graph on the ground set.
BuildingSet graph_building_set(const GroundSet& g, const std::vector<std::pair<int, int>>& edges);
// The union-closure (over intersecting members) of the singletons and the given sets.
BuildingSet building_closure(const GroundSet& g, const std::vector<Mask>& generators);
// Every building set on g (small g only).
std::vector<BuildingSet> all_building_sets(const GroundSet& g);

SubmodFn minkowski(const GroundSet& g, const std::map<Mask, Rational>& weights);
SubmodFn nestohedron(const BuildingSet& b);
std::vector<Preorder> b_forests(const BuildingSet& b);

SubmodFn preorder_cone(const Preorder& p);  // low_P

struct NamedFn {
  std::string name;
  SubmodFn z;
};
// Small functions from every generator family, |I| ≤ 4.
std::vector<NamedFn> example_corpus();
SubmodFn hexagon();
SubmodFn pentagon();

}  // namespace egp
