#include <gtest/gtest.h>

#include <set>

#include "egpkit/errors.hpp"
#include "egpkit/oracle.hpp"
#include "support.hpp"

using namespace egp;
using egp::test::fn;
using egp::test::rel;
using egp::test::set;

namespace {

const GroundSet g3 = letters(3);

std::vector<Preorder> filter_conforming(const SubmodFn& z) {
  std::vector<Preorder> out;
  for (const auto& p : oracle::all_preorders(z.ground()))
    if (oracle::conforming(p, z)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Conform, Compatibility) {
  for (const auto& l : enumerate_total_preorders(g3)) EXPECT_TRUE(is_compatible(l, hexagon()));
  EXPECT_FALSE(is_compatible(Preorder::discrete(letters(2)), low_of(rel(letters(2), "a<b"))));
  EXPECT_TRUE(is_compatible(rel(g3, "b<c<a"), hexagon()));
  EXPECT_FALSE(is_compatible(Preorder::discrete(g3), hexagon()));
  EXPECT_THROW(is_compatible(Preorder::discrete(letters(2)), hexagon()), ValidationError);
}

TEST(Conform, Conformity) {
  for (const auto& [name, z] : example_corpus())
    EXPECT_TRUE(is_conforming(equivalence(z.ground(), ctop_components(z)), z)) << name;
  EXPECT_FALSE(is_conforming(rel(g3, "a<c<b"), pentagon()));
  for (const auto& l : enumerate_total_preorders(g3))
    if (l.is_poset()) EXPECT_TRUE(is_conforming(l, hexagon()));
}

TEST(Conform, ConvexPiece) {
  SubmodFn z = hexagon();
  Preorder bca = rel(g3, "b<c<a");
  EXPECT_EQ(z_of_convex(z, bca, set(g3, "c")), fn("c", {{"c", "2"}}));
  EXPECT_EQ(z_of_convex(z, bca, z.full()), z);
  // C = {b} under a<b<c: smallest presentation {ab}∖{a}, largest {ab}∖{a} too;
  // under a<b, c the largest presentation is {abc}∖{ac}.
  Preorder abc = rel(g3, "a<b<c");
  EXPECT_EQ(z_of_convex(z, abc, set(g3, "b")), fn("b", {{"b", "2"}}));
  EXPECT_THROW(z_of_convex(z, abc, set(g3, "ac")), PreconditionError);
  for (const auto& [name, zz] : example_corpus()) {
    if (zz.size() > 3) continue;
    for (const auto& p : conforming_preorders(zz))
      for (Mask c : convex_subsets(p)) EXPECT_NO_THROW(z_of_convex(zz, p, c)) << name;
  }
}

TEST(Conform, FaceFunction) {
  SubmodFn z = hexagon();
  EXPECT_EQ(face_fn(z, Preorder::coarse(g3)), z);
  SubmodFn vertex = face_fn(z, rel(g3, "b<c<a"));
  EXPECT_EQ(vertex, fn("abc", {{"a", "1"}, {"b", "3"}, {"c", "2"}, {"ab", "4"}, {"ac", "3"},
                               {"bc", "5"}, {"abc", "6"}}));
  GroundSet g2 = letters(2);
  // A single bubble means A = ∅ in its presentation, so z_P = z.
  SubmodFn low = low_of(rel(g2, "a<b"));
  EXPECT_EQ(face_fn(low, Preorder::coarse(g2)), low);
  EXPECT_EQ(face_fn(low, Preorder::coarse(g2)), fn("ab", {{"a", "0"}, {"ab", "0"}}));
  EXPECT_THROW(face_fn(z, Preorder::discrete(g3)), PreconditionError);
  for (const auto& [name, zz] : example_corpus())
    for (const auto& p : conforming_preorders(zz)) EXPECT_TRUE(is_submodular(face_fn(zz, p))) << name;
}

TEST(Conform, ConeFunction) {
  SubmodFn z = hexagon();
  SubmodFn cone = cone_fn(z, rel(g3, "b<c<a"));
  EXPECT_EQ(cone, fn("abc", {{"b", "3"}, {"bc", "5"}, {"abc", "6"}}));
  EXPECT_TRUE(is_modular(cone));
  EXPECT_EQ(cone_fn(cone, pre_of(cone)), cone);
  EXPECT_EQ(cone_fn(z, Preorder::coarse(g3)), fn("abc", {{"abc", "6"}}));
}

TEST(Conform, Closure) {
  Preorder vee = rel(g3, "a<b, c<b");
  EXPECT_EQ(closure(pentagon(), rel(g3, "a<c<b")), vee);
  EXPECT_EQ(closure(pentagon(), rel(g3, "c<a<b")), vee);
  EXPECT_EQ(closure(hexagon(), rel(g3, "b<c<a")), rel(g3, "b<c<a"));
  for (const auto& [name, z] : example_corpus())
    for (const auto& p : enumerate_preorders(z.ground())) {
      if (!is_compatible(p, z)) continue;
      Preorder q = closure(z, p);
      EXPECT_TRUE(q.refines(p)) << name;
      EXPECT_EQ(closure(z, q), q) << name;
      EXPECT_TRUE(is_conforming(q, z)) << name;
    }
}

TEST(Conform, FaceCounts) {
  FaceLattice hex = enumerate_faces(hexagon());
  EXPECT_EQ(hex.faces.size(), 13u);
  EXPECT_EQ(hex.f_vector(), (std::vector<int>{6, 6, 1}));
  FaceLattice pen = enumerate_faces(pentagon());
  EXPECT_EQ(pen.f_vector(), (std::vector<int>{5, 5, 1}));
  FaceLattice seg = enumerate_faces(permutahedron({2, 1}));
  EXPECT_EQ(seg.f_vector(), (std::vector<int>{2, 1}));
  // The hexagon's Hasse diagram: each edge covers two vertices, the polygon covers six edges.
  EXPECT_EQ(hex.covers.size(), 18u);
  EXPECT_EQ(hex.order.size(), 6u * 2 + 6 + 6);
}

TEST(Conform, FacesMatchBruteForceFilter) {
  for (const auto& [name, z] : example_corpus()) {
    auto faces = conforming_preorders(z);
    EXPECT_EQ(test::keys(faces), test::keys(filter_conforming(z))) << name;
    std::vector<Preorder> lib_filter;
    for (const auto& p : enumerate_preorders(z.ground()))
      if (is_conforming(p, z)) lib_filter.push_back(p);
    EXPECT_EQ(faces, lib_filter) << name;
  }
}

TEST(Conform, LatticeStructure) {
  for (const auto& [name, z] : example_corpus()) {
    FaceLattice fl = enumerate_faces(z);
    Preorder top = equivalence(z.ground(), ctop_components(z));
    Partition comps = components(top);
    for (const auto& f : fl.faces) {
      EXPECT_EQ(f.dim, z.size() - static_cast<int>(bubbles(f.preorder).size())) << name;
      EXPECT_TRUE(f.preorder.refines(top)) << name;
      EXPECT_EQ(components(f.preorder), comps) << name;
      EXPECT_EQ(f.face_fn, face_fn(z, f.preorder));
    }
    for (auto [i, j] : fl.order) EXPECT_TRUE(is_contraction(fl.faces[i].preorder, fl.faces[j].preorder)) << name;
  }
}

TEST(Conform, MinimalFaces) {
  EXPECT_EQ(min_faces(hexagon()).size(), 6u);
  for (const auto& f : min_faces(hexagon())) EXPECT_TRUE(f.preorder.is_total() && f.preorder.is_poset());
  EXPECT_EQ(min_faces(pentagon()).size(), 5u);
  for (const auto& [name, z] : example_corpus()) {
    auto mins = min_faces(z);
    Partition b = bubbles(pre_of(z));
    for (const auto& f : mins) {
      EXPECT_EQ(bubbles(f.preorder), b) << name;
      if (z.is_finite()) EXPECT_TRUE(f.preorder.is_poset()) << name;
    }
    if (is_modular(z)) {
      ASSERT_EQ(mins.size(), 1u) << name;
      EXPECT_EQ(mins[0].preorder, pre_of(z)) << name;
    }
  }
}

TEST(Conform, LinearExtensionsPartitionTotalOrders) {
  for (const SubmodFn& z : {hexagon(), pentagon()}) {
    std::multiset<Preorder> seen;
    for (const auto& f : min_faces(z))
      for (const auto& l : linear_extensions(f.preorder)) seen.insert(l);
    std::set<Preorder> orders;
    for (const auto& l : enumerate_total_preorders(z.ground()))
      if (l.is_poset()) orders.insert(l);
    EXPECT_EQ(seen.size(), 6u);
    EXPECT_EQ(std::set<Preorder>(seen.begin(), seen.end()), orders);
  }
}

TEST(Conform, PreOfLowIsContractions) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_preorders(letters(n))) {
      EXPECT_EQ(pre_of(low_of(p)), p);
      EXPECT_EQ(conforming_preorders(low_of(p)), contractions(p)) << p.format();
    }
}

TEST(Conform, PreAndLow) {
  EXPECT_EQ(pre_of(hexagon()), Preorder::discrete(g3));
  EXPECT_EQ(low_of(Preorder::coarse(g3)), fn("abc", {{"abc", "0"}}));
}

TEST(Conform, ConeRestrictionLemma) {
  for (const auto& [name, z] : example_corpus())
    for (const auto& p : conforming_preorders(z)) {
      SubmodFn zp = cone_fn(z, p);
      for (Mask s : downsets(p).sets) {
        Mask t = z.full() & ~s;
        EXPECT_EQ(restrict(zp, s), cone_fn(restrict(z, s), p.restricted(s))) << name;
        EXPECT_EQ(corestrict(zp, s), cone_fn(corestrict(z, s), p.restricted(t))) << name;
      }
    }
}

TEST(Conform, ConeExchangeLemma) {
  // (z^P)_Q = (z_Q)^R for P ◀ Q in Pre(z) and R = G_P(Q).
  for (const auto& [name, z] : example_corpus()) {
    if (z.size() > 3) continue;
    auto pre = conforming_preorders(z);
    for (const auto& p : pre)
      for (const auto& q : pre) {
        if (!is_contraction(p, q)) continue;
        Preorder r = galois_g(p, q);
        SubmodFn zq = face_fn(z, q);
        EXPECT_EQ(face_fn(cone_fn(z, p), q), cone_fn(zq, r)) << name;
      }
  }
}

TEST(Conform, Glue) {
  SubmodFn z = hexagon();
  Mask a = set(g3, "a");
  Preorder trivial = Preorder::discrete(GroundSet({"a"}));
  Preorder bc = rel(GroundSet({"b", "c"}), "b<c");
  EXPECT_EQ(glue(z, a, trivial, bc), rel(g3, "a<b<c"));

  // Product case: the glue of the two parts is their disjoint union.
  SubmodFn u = hexagon(), v = SubmodFn(GroundSet({"d"}), {0, 1});
  SubmodFn uv = product(u, v);
  Mask su = uv.ground().transfer(u.ground(), u.full());
  for (const auto& p1 : conforming_preorders(u)) {
    Preorder p2 = Preorder::discrete(v.ground());
    Preorder glued = glue(uv, su, p1, p2);
    std::vector<Mask> rows = glued.rows();
    EXPECT_EQ(glued.restricted(su), p1);
    EXPECT_EQ(glued.below(3), Mask{8});
  }

  EXPECT_THROW(glue(z, a, trivial, Preorder::discrete(GroundSet({"b", "c"}))), PreconditionError);
  EXPECT_THROW(glue(low_of(rel(letters(2), "a<b")), set(letters(2), "b"), Preorder::discrete(GroundSet({"b"})),
                    Preorder::discrete(GroundSet({"a"}))),
               PreconditionError);
}

TEST(Conform, GlueIsUniqueExtension) {
  for (const SubmodFn& z : {hexagon(), pentagon()}) {
    auto pre = conforming_preorders(z);
    for (Mask s = 0; s <= z.full(); ++s) {
      Mask t = z.full() & ~s;
      for (const auto& p1 : conforming_preorders(restrict(z, s)))
        for (const auto& p2 : conforming_preorders(corestrict(z, s))) {
          std::vector<Preorder> matches;
          for (const auto& p : pre)
            if (p.is_downset(s) && p.restricted(s) == p1 && p.restricted(t) == p2) matches.push_back(p);
          ASSERT_EQ(matches.size(), 1u);
          EXPECT_EQ(glue(z, s, p1, p2), matches[0]);
        }
    }
  }
}
