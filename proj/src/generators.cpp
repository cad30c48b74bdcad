#include "egpkit/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "egpkit/conform.hpp"
#include "egpkit/errors.hpp"
#include "egpkit/limits.hpp"

namespace egp {

GroundSet letters(int n) {
  if (n < 0 || n > kHardMaxGround) throw ValidationError("letters: bad size");
  std::vector<std::string> ls;
  for (int i = 0; i < n; ++i) ls.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(ls));
}

SubmodFn permutahedron(const std::vector<Rational>& levels) {
  return permutahedron(letters(static_cast<int>(levels.size())), levels);
}

SubmodFn permutahedron(const GroundSet& g, const std::vector<Rational>& levels) {
  if (static_cast<int>(levels.size()) != g.size())
    throw ValidationError("permutahedron: need one level per element");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i] < levels[i - 1]))
      throw ValidationError("permutahedron: levels must be strictly decreasing");
  std::vector<Rational> prefix(levels.size() + 1, Rational(0));
  for (std::size_t i = 0; i < levels.size(); ++i) prefix[i + 1] = prefix[i] + levels[i];
  std::vector<ExtendedValue> table(std::size_t{1} << g.size());
  for (Mask m = 0; m < table.size(); ++m) table[m] = prefix[popcount(m)];
  return SubmodFn(g, std::move(table));
}

Matroid::Matroid(GroundSet ground, std::vector<Mask> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (bases_.empty()) throw ValidationError("matroid needs at least one basis");
  for (Mask b : bases_) {
    if (!contains(ground_.full(), b)) throw ValidationError("basis outside the ground set");
    if (popcount(b) != popcount(bases_[0])) throw ValidationError("bases differ in size");
  }
  for (Mask b1 : bases_)
    for (Mask b2 : bases_)
      for (Mask rest = b1 & ~b2; rest; rest &= rest - 1) {
        Mask x = rest & -rest;
        bool found = false;
        for (Mask cand = b2 & ~b1; cand && !found; cand &= cand - 1)
          found = is_basis((b1 & ~x) | (cand & -cand));
        if (!found) throw ValidationError("basis exchange fails");
      }
}

bool Matroid::is_basis(Mask b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

Mask Matroid::loops() const {
  Mask used = 0;
  for (Mask b : bases_) used |= b;
  return ground_.full() & ~used;
}

Matroid uniform_matroid(int r, int n) {
  if (r < 0 || r > n) throw ValidationError("uniform matroid needs 0 ≤ r ≤ n");
  GroundSet g = letters(n);
  std::vector<Mask> bases;
  for (Mask m = 0; m <= g.full(); ++m)
    if (popcount(m) == r) bases.push_back(m);
  return Matroid(std::move(g), std::move(bases));
}

Matroid graphic_matroid(int vertices, const std::vector<std::tuple<std::string, int, int>>& edges) {
  std::vector<std::string> labels;
  for (const auto& e : edges) labels.push_back(std::get<0>(e));
  GroundSet g(labels);
  std::vector<std::pair<int, int>> ends(edges.size());
  for (const auto& [l, u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw ValidationError("edge endpoint out of range");
    ends[g.index_of(l)] = {u, v};
  }
  auto acyclic = [&](Mask m) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int e = 0; e < g.size(); ++e) {
      if (!(m >> e & 1)) continue;
      int a = find(ends[e].first), b = find(ends[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  int best = 0;
  std::vector<Mask> forests;
  for (Mask m = 0; m <= g.full(); ++m)
    if (acyclic(m)) {
      best = std::max(best, popcount(m));
      forests.push_back(m);
    }
  std::erase_if(forests, [&](Mask m) { return popcount(m) != best; });
  return Matroid(std::move(g), std::move(forests));
}

SubmodFn matroid_rank(const Matroid& m) {
  std::vector<ExtendedValue> table(std::size_t{1} << m.ground().size());
  for (Mask a = 0; a < table.size(); ++a) {
    int r = 0;
    for (Mask b : m.bases()) r = std::max(r, popcount(a & b));
    table[a] = r;
  }
  return SubmodFn(m.ground(), std::move(table));
}

Preorder basis_vertex_poset(const Matroid& m, Mask basis) {
  if (!m.is_basis(basis)) throw PreconditionError("basis_vertex_poset: not a basis");
  const GroundSet& g = m.ground();
  const Mask free_part = basis | m.loops();
  std::vector<Mask> below(g.size());
  for (int c = 0; c < g.size(); ++c) {
    below[c] = Mask{1} << c;
    if (free_part >> c & 1) continue;
    // The circuit in B ∪ {c}: those b with B − b + c again a basis.
    for (Mask rest = basis; rest; rest &= rest - 1) {
      Mask b = rest & -rest;
      if (m.is_basis((basis & ~b) | Mask{1} << c)) below[c] |= b;
    }
  }
  return Preorder::from_below(g, std::move(below));
}

BuildingSet::BuildingSet(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Mask j : members_)
    if (j == 0 || !contains(ground_.full(), j)) throw ValidationError("building set member out of range");
  for (int i = 0; i < ground_.size(); ++i)
    if (!has(Mask{1} << i)) throw ValidationError("building set must contain every singleton");
  for (Mask j : members_)
    for (Mask k : members_)
      if ((j & k) && !has(j | k))
        throw ValidationError("building set not closed under unions of intersecting members");
}

bool BuildingSet::has(Mask m) const { return std::binary_search(members_.begin(), members_.end(), m); }

Partition BuildingSet::connected_components() const {
  Partition out;
  for (Mask j : members_) {
    bool maximal = true;
    for (Mask k : members_)
      if (k != j && contains(k, j)) maximal = false;
    if (maximal) out.push_back(j);
  }
  canonicalize(out);
  return out;
}

BuildingSet graph_building_set(const GroundSet& g, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Mask> adj(g.size(), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw ValidationError("edge endpoint out of range");
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::vector<Mask> members;
  for (Mask m = 1; m <= g.full(); ++m) {
    Mask reach = m & -m;
    for (Mask prev = 0; prev != reach;) {
      prev = reach;
      for (int i = 0; i < g.size(); ++i)
        if (reach >> i & 1) reach |= adj[i] & m;
    }
    if (reach == m) members.push_back(m);
  }
  return BuildingSet(g, std::move(members));
}

BuildingSet building_closure(const GroundSet& g, const std::vector<Mask>& generators) {
  std::set<Mask> fam(generators.begin(), generators.end());
  for (int i = 0; i < g.size(); ++i) fam.insert(Mask{1} << i);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Mask> cur(fam.begin(), fam.end());
    for (Mask j : cur)
      for (Mask k : cur)
        if ((j & k) && fam.insert(j | k).second) grew = true;
  }
  return BuildingSet(g, std::vector<Mask>(fam.begin(), fam.end()));
}

std::vector<BuildingSet> all_building_sets(const GroundSet& g) {
  require_within(g.size(), 4, "all_building_sets");
  // Non-singleton subsets, chosen freely, then filtered for union closure.
  std::vector<Mask> big;
  for (Mask m = 1; m <= g.full(); ++m)
    if (popcount(m) >= 2) big.push_back(m);
  std::vector<BuildingSet> out;
  const std::size_t k = big.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<Mask> members;
    for (int i = 0; i < g.size(); ++i) members.push_back(Mask{1} << i);
    for (std::size_t t = 0; t < k; ++t)
      if (pick >> t & 1) members.push_back(big[t]);
    std::set<Mask> fam(members.begin(), members.end());
    bool closed = true;
    for (Mask j : fam)
      for (Mask l : fam)
        if ((j & l) && !fam.count(j | l)) closed = false;
    if (closed) out.emplace_back(g, std::move(members));
  }
  return out;
}

SubmodFn minkowski(const GroundSet& g, const std::map<Mask, Rational>& weights) {
  for (const auto& [j, w] : weights) {
    if (j == 0 || !contains(g.full(), j)) throw ValidationError("minkowski: bad subset");
    if (w < 0) throw ValidationError("minkowski: negative weight");
  }
  std::vector<ExtendedValue> table(std::size_t{1} << g.size());
  for (Mask a = 0; a < table.size(); ++a) {
    Rational s = 0;
    for (const auto& [j, w] : weights)
      if (j & a) s += w;
    table[a] = s;
  }
  return SubmodFn(g, std::move(table));
}

SubmodFn nestohedron(const BuildingSet& b) {
  std::map<Mask, Rational> w;
  for (Mask j : b.members()) w[j] = 1;
  return minkowski(b.ground(), w);
}

std::vector<Preorder> b_forests(const BuildingSet& b) {
  Partition comps = b.connected_components();
  std::vector<Preorder> out;
  for (auto& n : enumerate_preorders(b.ground())) {
    const int k = n.size();
    auto incomparable = [&](int i, int j) { return !n.leq(i, j) && !n.leq(j, i); };
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (incomparable(i, j) && (n.above(i) & n.above(j))) ok = false;
    for (int p = 0; p < k && ok; ++p)
      if (!b.has(n.above(p))) ok = false;
    for (Mask m = 1; m <= n.full() && ok; ++m) {
      if (popcount(m) < 2) continue;
      bool antichain = true;
      Mask up = 0;
      for (int i = 0; i < k; ++i) {
        if (!(m >> i & 1)) continue;
        up |= n.above(i);
        for (int j = i + 1; j < k; ++j)
          if ((m >> j & 1) && !incomparable(i, j)) antichain = false;
      }
      if (antichain && b.has(up)) ok = false;
    }
    if (!ok) continue;
    Partition roots;
    for (int r = 0; r < k; ++r)
      if ((n.below(r) & ~n.above(r)) == 0) roots.push_back(n.above(r));
    canonicalize(roots);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots != comps) continue;
    out.push_back(std::move(n));
  }
  return out;
}

SubmodFn preorder_cone(const Preorder& p) { return low_of(p); }

SubmodFn hexagon() { return permutahedron({3, 2, 1}); }

SubmodFn pentagon() {
  GroundSet g = letters(3);
  auto m = [&](std::vector<std::string> ls) { return g.mask_of(ls); };
  return SubmodFn::from_finite(g, {{m({"a"}), 3},
                                   {m({"b"}), 3},
                                   {m({"c"}), 3},
                                   {m({"a", "b"}), 5},
                                   {m({"b", "c"}), 5},
                                   {m({"a", "c"}), 6},
                                   {m({"a", "b", "c"}), 6}});
}

std::vector<NamedFn> example_corpus() {
  std::vector<NamedFn> c;
  GroundSet g2 = letters(2), g3 = letters(3), g4 = letters(4);
  auto chain3 = Preorder::total(g3, {1, 2, 4});
  auto vee = Preorder::from_relations(g3, {{"a", "b"}, {"c", "b"}});
  auto ab_c = Preorder::from_relations(g3, {{"a", "b"}});
  auto bubble_ab_c = Preorder::from_relations(g3, {{"a", "b"}, {"b", "a"}, {"a", "c"}});

  c.push_back({"point", permutahedron({1})});
  c.push_back({"segment", permutahedron({2, 1})});
  c.push_back({"hexagon", hexagon()});
  c.push_back({"pentagon", pentagon()});
  c.push_back({"permutahedron4", permutahedron({4, 3, 2, 1})});
  c.push_back({"cardinality3", minkowski(g3, {{1, 1}, {2, 1}, {4, 1}})});
  c.push_back({"simplex-plus-edge", minkowski(g3, {{7, 1}, {3, 2}})});
  c.push_back({"low-chain2", low_of(Preorder::total(g2, {1, 2}))});
  c.push_back({"low-chain3", low_of(chain3)});
  c.push_back({"low-vee", low_of(vee)});
  c.push_back({"low-ab+c", low_of(ab_c)});
  c.push_back({"low-bubble", low_of(bubble_ab_c)});
  c.push_back({"hexagon-cone", cone_fn(hexagon(), Preorder::total(g3, {2, 4, 1}))});
  {
    // Hexagon values kept only on the down-sets of a<b, c: submodular, not modular.
    SubmodFn h = hexagon();
    std::vector<ExtendedValue> t(8, ExtendedValue::infinity());
    for (Mask m = 0; m < 8; ++m)
      if (ab_c.is_downset(m)) t[m] = h(m);
    c.push_back({"hexagon-on-ab+c", SubmodFn(g3, std::move(t))});
  }
  c.push_back({"U12", matroid_rank(uniform_matroid(1, 2))});
  c.push_back({"U23", matroid_rank(uniform_matroid(2, 3))});
  c.push_back({"K3", matroid_rank(graphic_matroid(3, {{"x", 0, 1}, {"y", 1, 2}, {"w", 0, 2}}))});
  c.push_back({"loop-matroid", matroid_rank(Matroid(g3, {1, 2}))});
  c.push_back({"nesto-path3", nestohedron(graph_building_set(g3, {{0, 1}, {1, 2}}))});
  c.push_back({"nesto-path4", nestohedron(graph_building_set(g4, {{0, 1}, {1, 2}, {2, 3}}))});
  c.push_back({"hexagon*point", product(hexagon(), SubmodFn(GroundSet({"d"}), {0, 1}))});
  c.push_back({"low-chain2*segment",
               product(low_of(Preorder::total(g2, {1, 2})),
                       permutahedron(GroundSet({"c", "d"}), {2, 1}))});
  return c;
}

}  // namespace egp
