#pragma once

#include <utility>
#include <vector>

#include "egpkit/preorder.hpp"
#include "egpkit/submod_fn.hpp"

namespace egp {

bool is_compatible(const Preorder& p, const SubmodFn& z);
bool is_conforming(const Preorder& p, const SubmodFn& z);

// z_C = z_{B/A} for a convex C = B∖A. Checks compatibility, and that the
// smallest and largest presentations of C give the same table.
SubmodFn z_of_convex(const SubmodFn& z, const Preorder& p, Mask c);

SubmodFn face_fn(const SubmodFn& z, const Preorder& p);  // z_P
SubmodFn cone_fn(const SubmodFn& z, const Preorder& p);  // z^P
Preorder closure(const SubmodFn& z, const Preorder& p);

Preorder pre_of(const SubmodFn& z);
SubmodFn low_of(const Preorder& p);

struct Face {
  Preorder preorder;
  int dim = 0;
  SubmodFn face_fn;
};

struct FaceLattice {
  SubmodFn z;
  std::vector<Face> faces;                  // sorted by (dim, preorder)
  std::vector<std::pair<int, int>> order;   // (i, j): face i ⊊ face j, i.e. P_i ⪯ P_j
  std::vector<std::pair<int, int>> covers;  // Hasse diagram of order

  std::vector<int> f_vector() const;  // number of faces by dimension
  int index_of(const Preorder& p) const;  // -1 when absent
};

FaceLattice enumerate_faces(const SubmodFn& z);
std::vector<Preorder> conforming_preorders(const SubmodFn& z);  // Pre(z), sorted
std::vector<Face> min_faces(const SubmodFn& z);
std::vector<Preorder> min_conforming_preorders(const SubmodFn& z);  // minPre(z), sorted

// The conforming preorder with S a down-set, P|_S = p1 and P|_{I∖S} = p2.
Preorder glue(const SubmodFn& z, Mask s, const Preorder& p1, const Preorder& p2);

}  // namespace egp
