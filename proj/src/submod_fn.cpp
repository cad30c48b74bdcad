#include "egpkit/submod_fn.hpp"

#include <sstream>

#include "egpkit/errors.hpp"

namespace egp {

SubmodFn::SubmodFn(GroundSet ground, std::vector<ExtendedValue> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  if (table_.size() != (std::size_t{1} << ground_.size()))
    throw ValidationError("table has " + std::to_string(table_.size()) + " entries, expected 2^" +
                          std::to_string(ground_.size()));
  if (table_[0] != ExtendedValue(0)) throw ValidationError("z(empty set) must be 0");
  if (table_[full()].is_infinite()) throw ValidationError("z(I) must be finite");
}

SubmodFn SubmodFn::checked(GroundSet ground, std::vector<ExtendedValue> table) {
  SubmodFn z(std::move(ground), std::move(table));
  if (!is_submodular(z)) throw ValidationError("function is not submodular");
  return z;
}

SubmodFn SubmodFn::from_finite(GroundSet ground,
                               const std::vector<std::pair<Mask, ExtendedValue>>& entries) {
  std::vector<ExtendedValue> table(std::size_t{1} << ground.size(), ExtendedValue::infinity());
  table[0] = 0;
  std::vector<bool> seen(table.size(), false);
  for (const auto& [m, v] : entries) {
    if (m > ground.full()) throw ValidationError("subset mask out of range");
    if (m == 0 && v != ExtendedValue(0)) throw ValidationError("z(empty set) must be 0");
    if (seen[m]) throw ValidationError("subset " + ground.format(m) + " listed twice");
    seen[m] = true;
    table[m] = v;
  }
  return SubmodFn(std::move(ground), std::move(table));
}

const ExtendedValue& SubmodFn::at(Mask m) const {
  if (m > full()) throw ValidationError("subset mask out of range");
  return table_[m];
}

bool SubmodFn::is_finite() const {
  for (const auto& v : table_)
    if (v.is_infinite()) return false;
  return true;
}

std::string SubmodFn::canonical_key() const {
  std::string key = "Z[";
  for (const auto& l : ground_.labels()) key += l + ",";
  key += "]";
  for (const auto& v : table_) key += v.str() + ";";
  return key;
}

namespace {

std::vector<Mask> finite_sets(const SubmodFn& z) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= z.full(); ++m)
    if (z.finite_at(m)) out.push_back(m);
  return out;
}

}  // namespace

bool is_submodular(const SubmodFn& z) {
  const int n = z.size();
  if (z.is_finite()) {
    // For real-valued functions the local exchange inequalities suffice.
    for (Mask s = 0; s <= z.full(); ++s)
      for (int i = 0; i < n; ++i) {
        if (s >> i & 1) continue;
        for (int j = i + 1; j < n; ++j) {
          if (s >> j & 1) continue;
          Mask si = s | Mask{1} << i, sj = s | Mask{1} << j;
          if (z(si).value() + z(sj).value() < z(si | sj).value() + z(s).value()) return false;
        }
      }
    return true;
  }
  // Pairs with an infinite side hold trivially.
  auto fin = finite_sets(z);
  for (std::size_t a = 0; a < fin.size(); ++a)
    for (std::size_t b = a + 1; b < fin.size(); ++b) {
      Mask s = fin[a], t = fin[b];
      if (contains(s, t) || contains(t, s)) continue;
      if (z(s) + z(t) < z(s | t) + z(s & t)) return false;
    }
  return true;
}

bool is_modular(const SubmodFn& z) {
  if (!is_submodular(z)) return false;
  auto fin = finite_sets(z);
  for (std::size_t a = 0; a < fin.size(); ++a)
    for (std::size_t b = a + 1; b < fin.size(); ++b) {
      Mask s = fin[a], t = fin[b];
      if (contains(s, t) || contains(t, s)) continue;
      if (z(s) + z(t) != z(s | t) + z(s & t)) return false;
    }
  return true;
}

SubmodFn restrict(const SubmodFn& z, Mask s) {
  if (!contains(z.full(), s)) throw ValidationError("restrict: subset outside the ground set");
  if (z(s).is_infinite())
    throw PreconditionError("restrict: z" + z.ground().format(s) + " is infinite");
  std::vector<ExtendedValue> table(std::size_t{1} << popcount(s));
  for (Mask u = 0; u < table.size(); ++u) table[u] = z(expand(u, s));
  return SubmodFn(z.ground().subset(s), std::move(table));
}

SubmodFn corestrict(const SubmodFn& z, Mask s) {
  if (!contains(z.full(), s)) throw ValidationError("corestrict: subset outside the ground set");
  if (z(s).is_infinite())
    throw PreconditionError("corestrict: z" + z.ground().format(s) + " is infinite");
  Mask rest = z.full() & ~s;
  std::vector<ExtendedValue> table(std::size_t{1} << popcount(rest));
  for (Mask u = 0; u < table.size(); ++u) table[u] = z(s | expand(u, rest)) - z(s);
  return SubmodFn(z.ground().subset(rest), std::move(table));
}

SubmodFn product(const SubmodFn& u, const SubmodFn& v) {
  if (!u.ground().disjoint_from(v.ground()))
    throw ValidationError("product: ground sets overlap");
  GroundSet g = u.ground().merged(v.ground());
  Mask su = g.transfer(u.ground(), u.full());
  Mask sv = g.full() & ~su;
  std::vector<ExtendedValue> table(std::size_t{1} << g.size());
  for (Mask e = 0; e < table.size(); ++e)
    table[e] = u(compress(e & su, su)) + v(compress(e & sv, sv));
  return SubmodFn(std::move(g), std::move(table));
}

bool splits_along(const SubmodFn& z, Mask c1) {
  Mask c2 = z.full() & ~c1;
  if (z(c1).is_infinite() || z(c2).is_infinite()) return false;
  return z(c1) + z(c2) == z(z.full());
}

namespace {

void split_block(const SubmodFn& z, Mask block, Partition& out) {
  // Splits of z|_C are read off z directly: z|_C(C1) = z(C1).
  if (popcount(block) > 1) {
    Mask low = block & -block;
    Mask rest = block & ~low;
    // Enumerate C1 ∋ lowest element, C1 ≠ C.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask c1 = low | sub, c2 = block & ~c1;
      if (c2 != 0 && z(c1).is_finite() && z(c2).is_finite() && z(c1) + z(c2) == z(block)) {
        split_block(z, c1, out);
        split_block(z, c2, out);
        return;
      }
      if (sub == 0) break;
    }
  }
  out.push_back(block);
}

}  // namespace

Decomposition decompose(const SubmodFn& z) {
  Decomposition d;
  if (z.size() > 0) split_block(z, z.full(), d.blocks);
  canonicalize(d.blocks);
  for (Mask b : d.blocks) d.factors.push_back(restrict(z, b));
  return d;
}

Partition ctop_components(const SubmodFn& z) { return decompose(z).blocks; }

bool zfn_equal(const SubmodFn& u, const SubmodFn& v) {
  if (u.ground() != v.ground()) throw ValidationError("zfn_equal: ground sets differ");
  return u == v;
}

std::string format_table(const SubmodFn& z) {
  std::ostringstream os;
  for (Mask m = 1; m <= z.full(); ++m) {
    if (m > 1) os << ' ';
    os << z.ground().format(m) << '=' << z(m).str();
  }
  return os.str();
}

}  // namespace egp
