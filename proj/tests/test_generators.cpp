#include <gtest/gtest.h>

#include "egpkit/errors.hpp"
#include "support.hpp"

using namespace egp;
using egp::test::fn;
using egp::test::keys;
using egp::test::rel;
using egp::test::set;

namespace {

const GroundSet g2 = letters(2);
const GroundSet g3 = letters(3);

std::vector<std::pair<std::string, Matroid>> test_matroids() {
  return {
      {"U12", uniform_matroid(1, 2)},
      {"U23", uniform_matroid(2, 3)},
      {"U24", uniform_matroid(2, 4)},
      {"U33", uniform_matroid(3, 3)},
      {"K3", graphic_matroid(3, {{"x", 0, 1}, {"y", 1, 2}, {"w", 0, 2}})},
      {"K3+pendant", graphic_matroid(4, {{"x", 0, 1}, {"y", 1, 2}, {"w", 0, 2}, {"v", 2, 3}})},
      {"loop", Matroid(g3, {1, 2})},
  };
}

}  // namespace

TEST(Generators, Permutahedron) {
  EXPECT_EQ(permutahedron({3, 2, 1}), fn("abc", {{"a", "3"}, {"b", "3"}, {"c", "3"}, {"ab", "5"},
                                                 {"ac", "5"}, {"bc", "5"}, {"abc", "6"}}));
  EXPECT_EQ(permutahedron({2, 1}), fn("ab", {{"a", "2"}, {"b", "2"}, {"ab", "3"}}));
  EXPECT_EQ(permutahedron({1}), fn("a", {{"a", "1"}}));
  EXPECT_THROW(permutahedron({2, 2}), ValidationError);
  EXPECT_THROW(permutahedron({1, 2}), ValidationError);
}

TEST(Generators, MatroidRank) {
  SubmodFn u23 = matroid_rank(uniform_matroid(2, 3));
  for (Mask m = 0; m < 8; ++m) EXPECT_EQ(u23(m), std::min(popcount(m), 2));
  SubmodFn loop = matroid_rank(Matroid(g3, {1, 2}));
  EXPECT_EQ(loop(set(g3, "c")), 0);
  EXPECT_EQ(loop(set(g3, "ab")), 1);
  SubmodFn k3 = matroid_rank(graphic_matroid(3, {{"x", 0, 1}, {"y", 1, 2}, {"w", 0, 2}}));
  for (Mask m = 0; m < 8; ++m) EXPECT_EQ(k3(m), std::min(popcount(m), 2));
  EXPECT_THROW(Matroid(g3, {1, 3}), ValidationError);  // sizes differ
  EXPECT_THROW(Matroid(letters(4), {3, 12}), ValidationError);  // exchange fails
  for (const auto& [name, m] : test_matroids()) {
    SubmodFn z = matroid_rank(m);
    for (Mask s = 0; s <= z.full(); ++s) {
      EXPECT_LE(z(s), popcount(s)) << name;
      for (int i = 0; i < z.size(); ++i) EXPECT_LE(z(s), z(s | Mask{1} << i)) << name;
    }
  }
}

TEST(Generators, BasisVertexPoset) {
  Matroid u23 = uniform_matroid(2, 3);
  EXPECT_EQ(basis_vertex_poset(u23, set(g3, "ab")), rel(g3, "a<c, b<c"));
  EXPECT_EQ(basis_vertex_poset(uniform_matroid(3, 3), 7), Preorder::discrete(g3));
  // c is a loop: minimal, and not below anything.
  Preorder p = basis_vertex_poset(Matroid(g3, {1, 2}), set(g3, "a"));
  EXPECT_EQ(p, rel(g3, "a<b"));
  EXPECT_THROW(basis_vertex_poset(u23, set(g3, "a")), PreconditionError);
}

TEST(Generators, Minkowski) {
  EXPECT_EQ(minkowski(g3, {{1, 1}, {2, 1}, {4, 1}}),
            fn("abc", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"ab", "2"}, {"ac", "2"}, {"bc", "2"}, {"abc", "3"}}));
  EXPECT_EQ(minkowski(g3, {{7, 1}}),
            fn("abc", {{"a", "1"}, {"b", "1"}, {"c", "1"}, {"ab", "1"}, {"ac", "1"}, {"bc", "1"}, {"abc", "1"}}));
  EXPECT_THROW(minkowski(g3, {{7, -1}}), ValidationError);
  EXPECT_THROW(minkowski(g3, {{0, 1}}), ValidationError);
}

TEST(Generators, Nestohedron) {
  BuildingSet path = graph_building_set(g3, {{0, 1}, {1, 2}});
  EXPECT_EQ(nestohedron(path),
            fn("abc", {{"a", "3"}, {"b", "4"}, {"c", "3"}, {"ab", "5"}, {"bc", "5"}, {"ac", "5"}, {"abc", "6"}}));
  BuildingSet singles = building_closure(g3, {});
  EXPECT_EQ(nestohedron(singles), minkowski(g3, {{1, 1}, {2, 1}, {4, 1}}));
  // Complete graph: every nonempty subset is connected, so z(A) counts subsets meeting A.
  BuildingSet k3 = graph_building_set(g3, {{0, 1}, {1, 2}, {0, 2}});
  SubmodFn z = nestohedron(k3);
  for (Mask a = 1; a < 8; ++a) {
    int meet = 0;
    for (Mask j = 1; j < 8; ++j) meet += (j & a) != 0;
    EXPECT_EQ(z(a), meet);
  }
  EXPECT_THROW(BuildingSet(g3, {1, 2, 3}), ValidationError);  // no {c}
  EXPECT_THROW(BuildingSet(g3, {1, 2, 4, 3, 6}), ValidationError);  // ab ∪ bc missing
}

TEST(Generators, BForestExamples) {
  BuildingSet path = graph_building_set(g3, {{0, 1}, {1, 2}});
  EXPECT_EQ(b_forests(path).size(), 11u);
  for (int n = 1; n <= 4; ++n) {
    auto fs = b_forests(building_closure(letters(n), {}));
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0], Preorder::discrete(letters(n)));
  }
  auto fs = b_forests(building_closure(g2, {3}));
  EXPECT_EQ(fs.size(), 3u);
  EXPECT_EQ(keys(fs), keys(conforming_preorders(nestohedron(building_closure(g2, {3})))));
}

TEST(Generators, PreorderCone) {
  EXPECT_EQ(preorder_cone(Preorder::coarse(g3)), fn("abc", {{"abc", "0"}}));
  EXPECT_EQ(preorder_cone(rel(g3, "a<b<c")), fn("abc", {{"a", "0"}, {"ab", "0"}, {"abc", "0"}}));
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_preorders(letters(n)))
      EXPECT_EQ(keys(conforming_preorders(preorder_cone(p))), keys(contractions(p))) << p.format();
}

TEST(GeneratorProperties, CorpusIsSubmodular) {
  for (const auto& [name, z] : example_corpus()) EXPECT_TRUE(is_submodular(z)) << name;
  for (const auto& [name, m] : test_matroids()) EXPECT_TRUE(is_submodular(matroid_rank(m))) << name;
}

TEST(GeneratorProperties, NestohedronFacesAreBForests) {
  int path_faces = -1;
  for (int n = 1; n <= 4; ++n)
    for (const auto& b : all_building_sets(letters(n))) {
      SubmodFn z = nestohedron(b);
      auto fs = b_forests(b);
      EXPECT_EQ(keys(fs), keys(conforming_preorders(z)));
      std::map<Mask, Rational> weights;
      for (Mask j : b.members()) weights[j] = 1;
      EXPECT_EQ(minkowski(b.ground(), weights), z);
      if (n == 3 && b.members().size() == 6 && b.has(3) && b.has(6)) path_faces = static_cast<int>(fs.size());
    }
  EXPECT_EQ(path_faces, 11);
}

TEST(GeneratorProperties, MatroidVertexPosets) {
  for (const auto& [name, m] : test_matroids()) {
    SubmodFn z = matroid_rank(m);
    std::vector<Preorder> from_bases;
    for (Mask b : m.bases()) {
      Preorder p = basis_vertex_poset(m, b);
      from_bases.push_back(p);
      EXPECT_LE(rank(p), 1) << name;
      EXPECT_TRUE(p.is_poset()) << name;
      for (const auto& l : linear_extensions(p)) EXPECT_EQ(closure(z, l), p) << name;
    }
    std::sort(from_bases.begin(), from_bases.end());
    from_bases.erase(std::unique(from_bases.begin(), from_bases.end()), from_bases.end());
    EXPECT_EQ(keys(from_bases), keys(min_conforming_preorders(z))) << name;
  }
}

TEST(GeneratorProperties, ContractedVertexPosetsCanHaveHeightTwo) {
  // Vertex posets have height ≤ 1, but faces above them need not: in the
  // octahedron of U_{2,4} the edge from e_ab to e_ac has preorder a<{b,c}<d.
  GroundSet g4 = letters(4);
  SubmodFn z = matroid_rank(uniform_matroid(2, 4));
  Preorder q = Preorder::from_relations(g4, {{"a", "b"}, {"b", "c"}, {"c", "b"}, {"b", "d"}});
  EXPECT_TRUE(is_conforming(q, z));
  EXPECT_EQ(bubbles(q).size(), 3u);  // a one-dimensional face
  EXPECT_EQ(rank(q), 2);
  int tall = 0;
  for (const auto& p : conforming_preorders(z)) tall += rank(p) > 1;
  EXPECT_EQ(conforming_preorders(z).size(), 27u);  // 6 vertices, 12 edges, 8 triangles, 1
  EXPECT_EQ(tall, 12);  // every edge
  for (const char* name : {"U12", "U23", "U33", "K3", "loop"})
    for (const auto& [n, m] : test_matroids())
      if (n == name)
        for (const auto& p : conforming_preorders(matroid_rank(m))) EXPECT_LE(rank(p), 1) << n;
}
