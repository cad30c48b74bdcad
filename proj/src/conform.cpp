#include "egpkit/conform.hpp"

#include <algorithm>
#include <map>

#include "egpkit/errors.hpp"
#include "egpkit/limits.hpp"

namespace egp {

namespace {

void require_same_ground(const Preorder& p, const SubmodFn& z, const char* what) {
  if (p.ground() != z.ground()) throw ValidationError(std::string(what) + ": ground sets differ");
}

// z_{(A∪C)/A} on the labels of C; A must be a finite down-set.
SubmodFn piece(const SubmodFn& z, Mask a, Mask c) {
  std::vector<ExtendedValue> table(std::size_t{1} << popcount(c));
  for (Mask u = 0; u < table.size(); ++u) table[u] = z(a | expand(u, c)) - z(a);
  return SubmodFn(z.ground().subset(c), std::move(table));
}

Mask below_part(const Preorder& p, Mask c) { return p.down_closure(c) & ~c; }

bool downsets_finite(const Preorder& p, const SubmodFn& z) {
  for (Mask m = 0; m <= p.full(); ++m)
    if (z(m).is_infinite() && p.is_downset(m)) return false;
  return true;
}

// Components of p|_C, as masks over the ground of p.
Partition components_within(const Preorder& p, Mask c) {
  Partition out;
  for (Mask k : components(p.restricted(c))) out.push_back(expand(k, c));
  canonicalize(out);
  return out;
}

Partition blocks_within(const SubmodFn& zc, Mask c) {
  Partition out;
  for (Mask b : decompose(zc).blocks) out.push_back(expand(b, c));
  canonicalize(out);
  return out;
}

Preorder closure_unchecked(const SubmodFn& z, const Preorder& p) {
  struct Bubble {
    Mask mask;
    Mask a;
    Partition blocks;
  };
  std::vector<Bubble> bs;
  for (Mask c : bubbles(p)) {
    Mask a = below_part(p, c);
    bs.push_back({c, a, blocks_within(piece(z, a, c), c)});
  }
  DownSetFamily t{z.ground(), {}};
  for (Mask m = 0; m <= z.full(); ++m) {
    if (z(m).is_infinite()) continue;
    ExtendedValue sum = 0;
    bool unions = true;
    for (const auto& b : bs) {
      Mask part = m & b.mask;
      sum = sum + (z(b.a | part) - z(b.a));
      for (Mask blk : b.blocks)
        if ((part & blk) != 0 && (part & blk) != blk) unions = false;
    }
    if (unions && sum == z(m)) t.sets.push_back(m);
  }
  Preorder q;
  try {
    q = preo_of(t);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("closure produced a non-topology: ") + e.what());
  }
  EGP_CHECK(q.refines(p), "closure is not below its input");
  return q;
}

bool conforming_unchecked(const Preorder& p, const SubmodFn& z) {
  for (Mask c : convex_subsets(p)) {
    Mask a = below_part(p, c);
    if (blocks_within(piece(z, a, c), c) != components_within(p, c)) return false;
  }
  return true;
}

}  // namespace

bool is_compatible(const Preorder& p, const SubmodFn& z) {
  require_same_ground(p, z, "is_compatible");
  if (!downsets_finite(p, z)) return false;
  for (Mask c : convex_subsets(p)) {
    Partition comps = components_within(p, c);
    if (comps.size() < 2) continue;
    Mask a = below_part(p, c);
    // Each component K of p|_C must split z_C: z(A∪K) + z(A∪(C∖K)) = z(A∪C) + z(A).
    for (Mask k : comps)
      if (z(a | k) + z(a | (c & ~k)) != z(a | c) + z(a)) return false;
  }
  return true;
}

bool is_conforming(const Preorder& p, const SubmodFn& z) {
  return is_compatible(p, z) && conforming_unchecked(p, z);
}

SubmodFn z_of_convex(const SubmodFn& z, const Preorder& p, Mask c) {
  require_same_ground(p, z, "z_of_convex");
  if (!p.is_convex(c)) throw PreconditionError("z_of_convex: " + z.ground().format(c) + " is not convex");
  if (!is_compatible(p, z)) throw PreconditionError("z_of_convex: preorder is not compatible");
  SubmodFn small = piece(z, below_part(p, c), c);
  // Largest presentation: A' = I ∖ ↑C.
  SubmodFn large = piece(z, z.full() & ~p.up_closure(c), c);
  EGP_CHECK(small == large, "z_C depends on the presentation of " + z.ground().format(c));
  return small;
}

SubmodFn face_fn(const SubmodFn& z, const Preorder& p) {
  require_same_ground(p, z, "face_fn");
  if (!is_compatible(p, z)) throw PreconditionError("face_fn: preorder is not compatible");
  std::vector<std::pair<Mask, Mask>> parts;
  for (Mask c : bubbles(p)) parts.emplace_back(c, below_part(p, c));
  std::vector<ExtendedValue> table(std::size_t{1} << z.size());
  for (Mask m = 0; m < table.size(); ++m) {
    ExtendedValue sum = 0;
    for (const auto& [c, a] : parts) sum = sum + (z(a | (m & c)) - z(a));
    table[m] = sum;
  }
  return SubmodFn(z.ground(), std::move(table));
}

SubmodFn cone_fn(const SubmodFn& z, const Preorder& p) {
  require_same_ground(p, z, "cone_fn");
  if (!is_compatible(p, z)) throw PreconditionError("cone_fn: preorder is not compatible");
  std::vector<ExtendedValue> table(std::size_t{1} << z.size(), ExtendedValue::infinity());
  for (Mask m = 0; m < table.size(); ++m)
    if (p.is_downset(m)) table[m] = z(m);
  return SubmodFn(z.ground(), std::move(table));
}

Preorder closure(const SubmodFn& z, const Preorder& p) {
  require_same_ground(p, z, "closure");
  if (!is_compatible(p, z)) throw PreconditionError("closure: preorder is not compatible");
  Preorder q = closure_unchecked(z, p);
  EGP_CHECK(conforming_unchecked(q, z) && is_compatible(q, z), "closure does not conform");
  return q;
}

Preorder pre_of(const SubmodFn& z) {
  DownSetFamily t{z.ground(), {}};
  for (Mask m = 0; m <= z.full(); ++m)
    if (z(m).is_finite()) t.sets.push_back(m);
  return preo_of(t);
}

SubmodFn low_of(const Preorder& p) {
  std::vector<ExtendedValue> table(std::size_t{1} << p.size(), ExtendedValue::infinity());
  for (Mask m = 0; m < table.size(); ++m)
    if (p.is_downset(m)) table[m] = 0;
  return SubmodFn(p.ground(), std::move(table));
}

std::vector<int> FaceLattice::f_vector() const {
  std::vector<int> f;
  for (const auto& face : faces) {
    if (face.dim >= static_cast<int>(f.size())) f.resize(face.dim + 1, 0);
    ++f[face.dim];
  }
  return f;
}

int FaceLattice::index_of(const Preorder& p) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].preorder == p) return static_cast<int>(i);
  return -1;
}

std::vector<Preorder> conforming_preorders(const SubmodFn& z) {
  std::map<std::vector<Mask>, Preorder> seen;
  for_each_total_preorder(z.ground(), [&](const std::vector<Mask>& levels) {
    // A total preorder is compatible iff its chain of down-sets is finite.
    Mask d = 0;
    for (Mask level : levels) {
      d |= level;
      if (z(d).is_infinite()) return;
    }
    Preorder l = Preorder::total(z.ground(), levels);
    Preorder q = closure_unchecked(z, l);
    seen.emplace(q.rows(), std::move(q));
  });
  std::vector<Preorder> out;
  for (auto& [rows, q] : seen) {
    EGP_CHECK(is_compatible(q, z) && conforming_unchecked(q, z), "closure does not conform");
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FaceLattice enumerate_faces(const SubmodFn& z) {
  FaceLattice fl{z, {}, {}, {}};
  const int n = z.size();
  for (auto& p : conforming_preorders(z)) {
    int dim = n - static_cast<int>(bubbles(p).size());
    SubmodFn f = face_fn(z, p);
    fl.faces.push_back({std::move(p), dim, std::move(f)});
  }
  std::stable_sort(fl.faces.begin(), fl.faces.end(),
                   [](const Face& a, const Face& b) { return a.dim < b.dim; });
  const int k = static_cast<int>(fl.faces.size());
  std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && fl.faces[i].preorder.refines(fl.faces[j].preorder)) {
        lt[i][j] = true;
        fl.order.emplace_back(i, j);
      }
  for (auto [i, j] : fl.order) {
    bool cover = true;
    for (int m = 0; m < k && cover; ++m)
      if (lt[i][m] && lt[m][j]) cover = false;
    if (cover) fl.covers.emplace_back(i, j);
  }
  return fl;
}

std::vector<Preorder> min_conforming_preorders(const SubmodFn& z) {
  auto all = conforming_preorders(z);
  std::vector<Preorder> out;
  for (const auto& p : all) {
    bool minimal = true;
    for (const auto& q : all)
      if (q != p && q.refines(p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  return out;
}

std::vector<Face> min_faces(const SubmodFn& z) {
  std::vector<Face> out;
  for (auto& p : min_conforming_preorders(z)) {
    int dim = z.size() - static_cast<int>(bubbles(p).size());
    SubmodFn f = face_fn(z, p);
    out.push_back({std::move(p), dim, std::move(f)});
  }
  return out;
}

Preorder glue(const SubmodFn& z, Mask s, const Preorder& p1, const Preorder& p2) {
  if (!contains(z.full(), s)) throw ValidationError("glue: subset outside the ground set");
  const Mask t = z.full() & ~s;
  if (z(s).is_infinite()) throw PreconditionError("glue: z(S) is infinite");
  if (p1.ground() != z.ground().subset(s) || p2.ground() != z.ground().subset(t))
    throw ValidationError("glue: preorders are not on S and I∖S");
  if (!is_conforming(p1, restrict(z, s)))
    throw PreconditionError("glue: P1 does not conform to z|_S");
  if (!is_conforming(p2, corestrict(z, s)))
    throw PreconditionError("glue: P2 does not conform to z_/S");
  std::vector<Mask> rows(z.size(), 0);
  int k1 = 0, k2 = 0;
  for (int j = 0; j < z.size(); ++j) {
    if (s >> j & 1)
      rows[j] = expand(p1.below(k1++), s);
    else
      rows[j] = expand(p2.below(k2++), t) | s;
  }
  Preorder q0 = Preorder::from_below(z.ground(), rows);
  EGP_CHECK(is_compatible(q0, z), "stacked preorder is not compatible");
  Preorder q = closure(z, q0);
  EGP_CHECK(q.is_downset(s) && q.restricted(s) == p1 && q.restricted(t) == p2,
            "glued preorder does not restrict to its parts");
  return q;
}

}  // namespace egp
