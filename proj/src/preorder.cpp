#include "egpkit/preorder.hpp"

#include <algorithm>
#include <set>

#include "egpkit/errors.hpp"
#include "egpkit/limits.hpp"

namespace egp {

namespace {

void close_transitively(std::vector<Mask>& below) {
  const int n = static_cast<int>(below.size());
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      if (below[j] >> k & 1) below[j] |= below[k];
}

void require_same_ground(const Preorder& p, const Preorder& q, const char* what) {
  if (p.ground() != q.ground()) throw ValidationError(std::string(what) + ": ground sets differ");
}

}  // namespace

Preorder Preorder::discrete(GroundSet ground) {
  std::vector<Mask> below(ground.size());
  for (int j = 0; j < ground.size(); ++j) below[j] = Mask{1} << j;
  return from_below(std::move(ground), std::move(below));
}

Preorder Preorder::coarse(GroundSet ground) {
  std::vector<Mask> below(ground.size(), ground.full());
  return from_below(std::move(ground), std::move(below));
}

Preorder Preorder::from_below(GroundSet ground, std::vector<Mask> below) {
  if (below.size() != static_cast<std::size_t>(ground.size()))
    throw ValidationError("relation has the wrong number of rows");
  for (int j = 0; j < ground.size(); ++j) {
    if (!contains(ground.full(), below[j])) throw ValidationError("relation row out of range");
    below[j] |= Mask{1} << j;
  }
  close_transitively(below);
  Preorder p;
  p.ground_ = std::move(ground);
  p.below_ = std::move(below);
  return p;
}

Preorder Preorder::from_relations(GroundSet ground,
                                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Mask> below(ground.size(), 0);
  for (const auto& [x, y] : pairs) below[ground.index_of(y)] |= Mask{1} << ground.index_of(x);
  return from_below(std::move(ground), std::move(below));
}

Preorder Preorder::total(GroundSet ground, const std::vector<Mask>& levels) {
  std::vector<Mask> below(ground.size(), 0);
  Mask seen = 0;
  for (Mask level : levels) {
    if (level & seen) throw ValidationError("total: levels overlap");
    seen |= level;
    for (int j = 0; j < ground.size(); ++j)
      if (level >> j & 1) below[j] = seen;
  }
  if (seen != ground.full()) throw ValidationError("total: levels do not cover the ground set");
  return from_below(std::move(ground), std::move(below));
}

Mask Preorder::above(int i) const {
  Mask m = 0;
  for (int j = 0; j < size(); ++j)
    if (below_[j] >> i & 1) m |= Mask{1} << j;
  return m;
}

Mask Preorder::down_closure(Mask m) const {
  Mask out = 0;
  for (int j = 0; j < size(); ++j)
    if (m >> j & 1) out |= below_[j];
  return out;
}

Mask Preorder::up_closure(Mask m) const {
  Mask out = 0;
  for (int i = 0; i < size(); ++i)
    if (below_[i] & m) out |= Mask{1} << i;
  return out;
}

bool Preorder::refines(const Preorder& q) const {
  require_same_ground(*this, q, "refines");
  for (int j = 0; j < size(); ++j)
    if (!contains(q.below_[j], below_[j])) return false;
  return true;
}

bool Preorder::is_total() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

bool Preorder::is_poset() const {
  for (int j = 0; j < size(); ++j)
    if ((below_[j] & above(j)) != Mask{1} << j) return false;
  return true;
}

bool Preorder::is_connected() const { return components(*this).size() <= 1; }

Preorder Preorder::restricted(Mask s) const {
  std::vector<Mask> rows;
  for (int j = 0; j < size(); ++j)
    if (s >> j & 1) rows.push_back(compress(below_[j] & s, s));
  return from_below(ground_.subset(s), std::move(rows));
}

std::vector<std::pair<std::string, std::string>> Preorder::relations() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && leq(i, j)) out.emplace_back(ground_.label(i), ground_.label(j));
  return out;
}

std::string Preorder::canonical_key() const {
  std::string key = "P[";
  for (const auto& l : ground_.labels()) key += l + ",";
  key += "]";
  for (Mask row : below_) key += std::to_string(row) + ";";
  return key;
}

std::string Preorder::format() const {
  // Hasse diagram on bubbles: "a<b, {c,d}<e, f".
  Partition bs = bubbles(*this);
  auto name = [&](Mask b) { return popcount(b) == 1 ? ground_.label(std::countr_zero(b)) : ground_.format(b); };
  auto lt = [&](Mask x, Mask y) { return less(std::countr_zero(x), std::countr_zero(y)); };
  std::vector<std::string> parts;
  std::vector<bool> touched(bs.size(), false);
  for (std::size_t x = 0; x < bs.size(); ++x)
    for (std::size_t y = 0; y < bs.size(); ++y) {
      if (!lt(bs[x], bs[y])) continue;
      bool cover = true;
      for (std::size_t m = 0; m < bs.size() && cover; ++m)
        if (lt(bs[x], bs[m]) && lt(bs[m], bs[y])) cover = false;
      if (!cover) continue;
      parts.push_back(name(bs[x]) + "<" + name(bs[y]));
      touched[x] = touched[y] = true;
    }
  for (std::size_t x = 0; x < bs.size(); ++x)
    if (!touched[x]) parts.push_back(name(bs[x]));
  if (parts.empty()) return "()";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) s += ", " + parts[k];
  return s;
}

DownSetFamily downsets(const Preorder& p) {
  DownSetFamily t{p.ground(), {}};
  for (Mask m = 0; m <= p.full(); ++m)
    if (p.is_downset(m)) t.sets.push_back(m);
  return t;
}

Preorder preo_of(const DownSetFamily& t) {
  std::set<Mask> members(t.sets.begin(), t.sets.end());
  if (!members.count(0) || !members.count(t.ground.full()))
    throw ValidationError("topology must contain the empty set and the ground set");
  for (Mask a : members) {
    if (!contains(t.ground.full(), a)) throw ValidationError("topology member out of range");
    for (Mask b : members)
      if (!members.count(a | b) || !members.count(a & b))
        throw ValidationError("family is not closed under union and intersection");
  }
  std::vector<Mask> below(t.ground.size(), t.ground.full());
  for (Mask a : members)
    for (int j = 0; j < t.ground.size(); ++j)
      if (a >> j & 1) below[j] &= a;
  return Preorder::from_below(t.ground, std::move(below));
}

Partition bubbles(const Preorder& p) {
  Partition out;
  Mask seen = 0;
  for (int j = 0; j < p.size(); ++j) {
    if (seen >> j & 1) continue;
    Mask b = p.below(j) & p.above(j);
    out.push_back(b);
    seen |= b;
  }
  canonicalize(out);
  return out;
}

Partition components(const Preorder& p) {
  Partition out;
  Mask seen = 0;
  for (int j = 0; j < p.size(); ++j) {
    if (seen >> j & 1) continue;
    Mask comp = Mask{1} << j;
    for (Mask prev = 0; prev != comp;) {
      prev = comp;
      comp = p.down_closure(comp) | p.up_closure(comp);
    }
    out.push_back(comp);
    seen |= comp;
  }
  canonicalize(out);
  return out;
}

Preorder equivalence(const GroundSet& g, const Partition& blocks) {
  std::vector<Mask> below(g.size(), 0);
  for (Mask b : blocks)
    for (int j = 0; j < g.size(); ++j)
      if (b >> j & 1) below[j] = b;
  return Preorder::from_below(g, std::move(below));
}

Preorder meet(const Preorder& p, const Preorder& q) {
  require_same_ground(p, q, "meet");
  std::vector<Mask> rows(p.size());
  for (int j = 0; j < p.size(); ++j) rows[j] = p.below(j) & q.below(j);
  return Preorder::from_below(p.ground(), std::move(rows));
}

Preorder join(const Preorder& p, const Preorder& q) {
  require_same_ground(p, q, "join");
  std::vector<Mask> rows(p.size());
  for (int j = 0; j < p.size(); ++j) rows[j] = p.below(j) | q.below(j);
  return Preorder::from_below(p.ground(), std::move(rows));
}

Preorder opposite(const Preorder& p) {
  std::vector<Mask> rows(p.size());
  for (int j = 0; j < p.size(); ++j) rows[j] = p.above(j);
  return Preorder::from_below(p.ground(), std::move(rows));
}

Preorder galois_f(const Preorder& p, const Preorder& r) {
  if (!r.refines(p)) throw PreconditionError("F_P(R) needs R ⪯ P");
  return join(p, opposite(r));
}

Preorder galois_g(const Preorder& p, const Preorder& q) {
  if (!p.refines(q)) throw PreconditionError("G_P(Q) needs P ⪯ Q");
  return meet(p, opposite(q));
}

bool is_subdivision(const Preorder& r, const Preorder& p) {
  if (!r.refines(p)) return false;
  return r == meet(p, join(opposite(p), r));
}

bool is_subdivision_admissible(const Preorder& r, const Preorder& p) {
  if (!r.refines(p)) return false;
  Partition comps = components(r);
  if (bubbles(join(p, opposite(r))) != comps) return false;
  for (Mask k : comps)
    if (r.restricted(k) != p.restricted(k)) return false;
  return true;
}

bool is_subdivision_convex(const Preorder& r, const Preorder& p) {
  if (!r.refines(p)) return false;
  for (Mask k : convex_subsets(r))
    if (r.restricted(k).is_connected() && !p.is_convex(k)) return false;
  return true;
}

bool is_contraction_by_covers(const Preorder& p, const Preorder& q) {
  if (!p.refines(q)) return false;
  Partition qb = bubbles(q);
  for (Mask b : qb)
    if (!p.restricted(b).is_connected()) return false;
  auto rep = [](Mask b) { return std::countr_zero(b); };
  for (Mask b1 : qb)
    for (Mask b2 : qb) {
      if (!q.less(rep(b1), rep(b2))) continue;
      bool cover = true;
      for (Mask m : qb)
        if (q.less(rep(b1), rep(m)) && q.less(rep(m), rep(b2))) cover = false;
      if (!cover) continue;
      bool witnessed = false;
      for (int y = 0; y < p.size() && !witnessed; ++y)
        if ((b2 >> y & 1) && (p.below(y) & b1)) witnessed = true;
      if (!witnessed) return false;
    }
  return true;
}

bool is_contraction_fixpoint(const Preorder& p, const Preorder& q) {
  if (!p.refines(q)) return false;
  return q == join(p, meet(opposite(p), q));
}

bool is_contraction(const Preorder& p, const Preorder& q) {
  bool a = is_contraction_by_covers(p, q);
  bool b = is_contraction_fixpoint(p, q);
  EGP_CHECK(a == b, "contraction tests disagree on " + p.format() + " / " + q.format());
  return a;
}

std::vector<Preorder> subdivisions(const Preorder& p) {
  std::vector<Preorder> out;
  for (auto& r : enumerate_preorders(p.ground()))
    if (is_subdivision(r, p)) out.push_back(std::move(r));
  return out;
}

std::vector<Preorder> contractions(const Preorder& p) {
  std::vector<Preorder> out;
  for (auto& q : enumerate_preorders(p.ground()))
    if (is_contraction(p, q)) out.push_back(std::move(q));
  return out;
}

std::vector<Preorder> enumerate_preorders(const GroundSet& g) {
  require_within(g.size(), limits().max_all_preorders, "enumerate_preorders");
  const int n = g.size();
  std::vector<Preorder> out;
  std::vector<Mask> rows(n, 0);
  // Insert elements 0..n-1 in turn. Element k goes above a down-set D and
  // below an up-set U of the preorder built so far, with D × U ⊆ ≤.
  std::function<void(int)> grow = [&](int k) {
    if (k == n) {
      out.push_back(Preorder::from_below(g, rows));
      return;
    }
    const Mask old = (Mask{1} << k) - 1;
    auto down = [&](Mask m) {
      Mask c = 0;
      for (int j = 0; j < k; ++j)
        if (m >> j & 1) c |= rows[j];
      return c;
    };
    auto up = [&](Mask m) {
      Mask c = 0;
      for (int i = 0; i < k; ++i)
        if (rows[i] & m) c |= Mask{1} << i;
      return c;
    };
    std::vector<Mask> downs, ups;
    for (Mask m = 0; m <= old; ++m) {
      if (down(m) == m) downs.push_back(m);
      if (up(m) == m) ups.push_back(m);
    }
    const std::vector<Mask> saved = rows;
    for (Mask d : downs)
      for (Mask u : ups) {
        bool ok = true;
        for (int y = 0; y < k && ok; ++y)
          if ((u >> y & 1) && !contains(rows[y], d)) ok = false;
        if (!ok) continue;
        rows[k] = d | Mask{1} << k;
        for (int y = 0; y < k; ++y)
          if (u >> y & 1) rows[y] |= rows[k];
        grow(k + 1);
        rows = saved;
      }
  };
  grow(0);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_total_preorder(const GroundSet& g,
                             const std::function<void(const std::vector<Mask>&)>& visit) {
  require_within(g.size(), limits().max_total_preorders, "enumerate_total_preorders");
  std::vector<Mask> levels;
  std::function<void(Mask)> rec = [&](Mask rest) {
    if (rest == 0) {
      visit(levels);
      return;
    }
    for (Mask sub = rest; sub; sub = (sub - 1) & rest) {
      levels.push_back(sub);
      rec(rest & ~sub);
      levels.pop_back();
    }
  };
  rec(g.full());
}

std::vector<Preorder> enumerate_total_preorders(const GroundSet& g) {
  std::vector<Preorder> out;
  for_each_total_preorder(g, [&](const std::vector<Mask>& levels) {
    out.push_back(Preorder::total(g, levels));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Preorder> linear_extensions(const Preorder& p) {
  Partition bs = bubbles(p);
  std::vector<Preorder> out;
  std::vector<Mask> levels;
  std::function<void(Mask)> rec = [&](Mask placed) {
    if (placed == p.full()) {
      out.push_back(Preorder::total(p.ground(), levels));
      return;
    }
    for (Mask b : bs) {
      if (b & placed) continue;
      // Every element strictly below b must already be placed.
      if (!contains(placed | b, p.down_closure(b))) continue;
      levels.push_back(b);
      rec(placed | b);
      levels.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> convex_subsets(const Preorder& p) {
  // m is convex iff m = ↓m ∩ ↑m, i.e. m is of the form D ∩ U.
  std::vector<Mask> out;
  for (Mask m = 1; m <= p.full(); ++m)
    if (p.is_convex(m)) out.push_back(m);
  return out;
}

int rank(const Preorder& p) {
  Partition bs = bubbles(p);
  // Bubbles in a linear order compatible with p: by size of down-closure.
  std::sort(bs.begin(), bs.end(), [&](Mask a, Mask b) {
    return popcount(p.down_closure(a)) < popcount(p.down_closure(b));
  });
  std::vector<int> height(bs.size(), 0);
  int best = 0;
  for (std::size_t y = 0; y < bs.size(); ++y) {
    for (std::size_t x = 0; x < y; ++x)
      if (p.less(std::countr_zero(bs[x]), std::countr_zero(bs[y])))
        height[y] = std::max(height[y], height[x] + 1);
    best = std::max(best, height[y]);
  }
  return best;
}

}  // namespace egp
