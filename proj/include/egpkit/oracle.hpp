#pragma once

// Brute-force reference implementations written straight from the
// definitions. They share no code paths with the library beyond the data
// types, and are only meant for tiny ground sets.

#include <algorithm>
#include <functional>
#include <vector>

#include "egpkit/preorder.hpp"
#include "egpkit/submod_fn.hpp"

namespace egp::oracle {

// Every reflexive transitive relation, by scanning all n×n bit matrices.
inline std::vector<Preorder> all_preorders(const GroundSet& g) {
  const int n = g.size();
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::vector<Preorder> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t t = 0; t < off.size(); ++t)
      if (bits >> t & 1) r[off[t].first][off[t].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) transitive = false;
    if (!transitive) continue;
    std::vector<Mask> below(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][j]) below[j] |= Mask{1} << i;
    out.push_back(Preorder::from_below(g, below));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool submodular(const SubmodFn& z) {
  for (Mask s = 0; s <= z.full(); ++s)
    for (Mask t = 0; t <= z.full(); ++t)
      if (z(s) + z(t) < z(s | t) + z(s & t)) return false;
  return true;
}

// z(S1 ∪ S2) = z(S1) + z(S2) for all S1 ⊆ C1, S2 ⊆ C2 = I ∖ C1.
inline bool splits_definitional(const SubmodFn& z, Mask c1) {
  Mask c2 = z.full() & ~c1;
  for (Mask s1 = 0; s1 <= z.full(); ++s1) {
    if (!contains(c1, s1)) continue;
    for (Mask s2 = 0; s2 <= z.full(); ++s2) {
      if (!contains(c2, s2)) continue;
      if (z(s1 | s2) != z(s1) + z(s2)) return false;
    }
  }
  return true;
}

// Common refinement of every definitional bipartition split.
inline Partition finest_blocks(const SubmodFn& z) {
  const int n = z.size();
  Partition out;
  Mask seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen >> i & 1) continue;
    Mask block = z.full();
    for (Mask c1 = 0; c1 <= z.full(); ++c1)
      if (c1 != 0 && c1 != z.full() && splits_definitional(z, c1))
        block &= (c1 >> i & 1) ? c1 : ~c1;
    out.push_back(block);
    seen |= block;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool downset(const Preorder& p, Mask m) {
  for (int j = 0; j < p.size(); ++j)
    if ((m >> j & 1) && !contains(m, p.below(j))) return false;
  return true;
}

// No relation in either direction between c1 and c2.
inline bool separated(const Preorder& p, Mask c1, Mask c2) {
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if ((c1 >> i & 1) && (c2 >> j & 1) && (p.leq(i, j) || p.leq(j, i))) return false;
  return true;
}

// Conformity straight from the definition, over every presentation B ∖ A.
inline bool conforming(const Preorder& p, const SubmodFn& z) {
  std::vector<Mask> downs;
  for (Mask m = 0; m <= z.full(); ++m)
    if (downset(p, m)) {
      if (z(m).is_infinite()) return false;
      downs.push_back(m);
    }
  for (Mask a : downs)
    for (Mask b : downs) {
      if (!contains(b, a) || a == b) continue;
      Mask c = b & ~a;
      for (Mask c1 = (c - 1) & c; c1; c1 = (c1 - 1) & c) {
        Mask c2 = c & ~c1;
        // z_C splits along (C1, C2), in the presentation z(A ∪ ·) − z(A).
        bool split = true;
        for (Mask s1 = c1;; s1 = (s1 - 1) & c1) {
          for (Mask s2 = c2;; s2 = (s2 - 1) & c2) {
            if (z(a | s1 | s2) - z(a) != (z(a | s1) - z(a)) + (z(a | s2) - z(a))) split = false;
            if (s2 == 0) break;
          }
          if (s1 == 0) break;
        }
        if (split != separated(p, c1, c2)) return false;
      }
    }
  return true;
}

inline Mask up(const Preorder& p, int i) {
  Mask m = 0;
  for (int j = 0; j < p.size(); ++j)
    if (p.leq(i, j)) m |= Mask{1} << j;
  return m;
}

// h : bubbles → {1..k} (strict) or {0..k} (weak), by exhaustive listing.
inline long count_maps(const Preorder& p, long k, bool strict) {
  std::vector<int> rep;
  Mask seen = 0;
  for (int j = 0; j < p.size(); ++j) {
    if (seen >> j & 1) continue;
    seen |= p.below(j) & up(p, j);
    rep.push_back(j);
  }
  const int d = static_cast<int>(rep.size());
  long lo = strict ? 1 : 0, hi = k;
  if (hi < lo) return d == 0 ? 1 : 0;
  std::vector<long> h(d, lo);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (int x = 0; x < d && ok; ++x)
      for (int y = 0; y < d && ok; ++y) {
        if (x == y || !p.leq(rep[x], rep[y])) continue;
        if (strict ? !(h[x] > h[y]) : !(h[x] >= h[y])) ok = false;
      }
    if (ok) ++count;
    int t = 0;
    while (t < d && h[t] == hi) h[t++] = lo;
    if (t == d) break;
    ++h[t];
  }
  return count;
}

}  // namespace egp::oracle
