#include "egpkit/hopf.hpp"

#include <sstream>
#include <utility>

#include "egpkit/conform.hpp"
#include "egpkit/errors.hpp"

namespace egp {

std::string factor_key(const Factor& f) {
  return std::visit([](const auto& x) { return x.canonical_key(); }, f);
}

const GroundSet& factor_ground(const Factor& f) {
  return std::visit([](const auto& x) -> const GroundSet& { return x.ground(); }, f);
}

std::string format_factor(const Factor& f) {
  if (const auto* z = std::get_if<SubmodFn>(&f)) return "z[" + format_table(*z) + "]";
  return "P[" + std::get<Preorder>(f).format() + "]";
}

std::string term_key(const Term& t) {
  std::string key;
  for (const auto& f : t) key += factor_key(f) + "|";
  return key;
}

FormalSum::FormalSum(Term t, Rational c) { add(std::move(t), c); }

void FormalSum::add(Term t, const Rational& c) {
  if (c == 0) return;
  std::string key = term_key(t);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), Entry{std::move(t), c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) entries_.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [key, e] : o.entries_) add(e.term, e.coeff);
  return *this;
}

FormalSum FormalSum::scaled(const Rational& c) const {
  FormalSum out;
  for (const auto& [key, e] : entries_) out.add(e.term, e.coeff * c);
  return out;
}

Rational FormalSum::coefficient(const Term& t) const {
  auto it = entries_.find(term_key(t));
  return it == entries_.end() ? Rational(0) : it->second.coeff;
}

FormalSum FormalSum::apply_slot(std::size_t slot,
                                const std::function<FormalSum(const Factor&)>& f) const {
  FormalSum out;
  for (const auto& [key, e] : entries_) {
    if (slot >= e.term.size()) throw ValidationError("apply_slot: slot out of range");
    for (const auto& [k2, img] : f(e.term[slot]).entries_) {
      Term t(e.term.begin(), e.term.begin() + slot);
      t.insert(t.end(), img.term.begin(), img.term.end());
      t.insert(t.end(), e.term.begin() + slot + 1, e.term.end());
      out.add(std::move(t), e.coeff * img.coeff);
    }
  }
  return out;
}

FormalSum FormalSum::permuted(const std::vector<std::size_t>& order) const {
  FormalSum out;
  for (const auto& [key, e] : entries_) {
    if (order.size() != e.term.size()) throw ValidationError("permuted: arity mismatch");
    Term t;
    for (std::size_t i : order) t.push_back(e.term.at(i));
    out.add(std::move(t), e.coeff);
  }
  return out;
}

FormalSum FormalSum::multiply_slots(std::size_t i, std::size_t j) const {
  if (i >= j) throw ValidationError("multiply_slots: need i < j");
  FormalSum out;
  for (const auto& [key, e] : entries_) {
    if (j >= e.term.size()) throw ValidationError("multiply_slots: slot out of range");
    Term t = e.term;
    t[i] = multiply(t[i], t[j]);
    t.erase(t.begin() + j);
    out.add(std::move(t), e.coeff);
  }
  return out;
}

std::string FormalSum::format() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : entries_) {
    if (!first) os << '\n';
    first = false;
    os << to_string(e.coeff) << " *";
    if (e.term.empty()) os << " 1";
    for (std::size_t k = 0; k < e.term.size(); ++k) os << (k ? " (x) " : " ") << format_factor(e.term[k]);
  }
  return os.str();
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (auto x = a.entries_.begin(), y = b.entries_.begin(); x != a.entries_.end(); ++x, ++y)
    if (x->first != y->first || x->second.coeff != y->second.coeff) return false;
  return true;
}

FormalSum tensor(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ka, x] : a.entries())
    for (const auto& [kb, y] : b.entries()) {
      Term t = x.term;
      t.insert(t.end(), y.term.begin(), y.term.end());
      out.add(std::move(t), x.coeff * y.coeff);
    }
  return out;
}

FormalSum multiply(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ka, x] : a.entries())
    for (const auto& [kb, y] : b.entries()) {
      if (x.term.size() != y.term.size()) throw ValidationError("multiply: arity mismatch");
      Term t;
      for (std::size_t k = 0; k < x.term.size(); ++k) t.push_back(multiply(x.term[k], y.term[k]));
      out.add(std::move(t), x.coeff * y.coeff);
    }
  return out;
}

Preorder disjoint_union(const Preorder& p, const Preorder& q) {
  if (!p.ground().disjoint_from(q.ground()))
    throw ValidationError("disjoint_union: ground sets overlap");
  GroundSet g = p.ground().merged(q.ground());
  std::vector<Mask> below(g.size());
  for (const Preorder* part : {&p, &q}) {
    Mask support = g.transfer(part->ground(), part->full());
    for (int j = 0; j < part->size(); ++j)
      below[std::countr_zero(expand(Mask{1} << j, support))] = expand(part->below(j), support);
  }
  return Preorder::from_below(std::move(g), std::move(below));
}

Factor multiply(const Factor& a, const Factor& b) {
  if (a.index() != b.index()) throw ValidationError("multiply: factor kinds differ");
  if (const auto* u = std::get_if<SubmodFn>(&a)) return product(*u, std::get<SubmodFn>(b));
  return disjoint_union(std::get<Preorder>(a), std::get<Preorder>(b));
}

FormalSum coproduct_delta(const SubmodFn& z, Mask s) {
  if (!contains(z.full(), s)) throw ValidationError("coproduct: subset outside the ground set");
  if (z(s).is_infinite()) return {};
  return FormalSum(Term{restrict(z, s), corestrict(z, s)});
}

FormalSum full_coproduct(const SubmodFn& z) {
  FormalSum out;
  for (Mask s = 0; s <= z.full(); ++s) out += coproduct_delta(z, s);
  return out;
}

FormalSum internal_delta(const SubmodFn& z) {
  FormalSum out;
  for (const auto& p : conforming_preorders(z)) out.add(Term{face_fn(z, p), cone_fn(z, p)}, 1);
  return out;
}

FormalSum phi(const SubmodFn& z) {
  FormalSum out;
  for (const auto& p : min_conforming_preorders(z)) out.add(Term{cone_fn(z, p)}, 1);
  return out;
}

namespace {

void require_modular(const SubmodFn& z, const char* what) {
  if (!is_modular(z)) throw PreconditionError(std::string(what) + ": function is not modular");
}

}  // namespace

Preorder psi(const SubmodFn& z) {
  require_modular(z, "psi");
  return pre_of(z);
}

bool is_totally_disconnected(const Preorder& p) { return p == opposite(p); }

Rational counit_eps(const SubmodFn& z) {
  require_modular(z, "counit");
  return is_totally_disconnected(pre_of(z)) ? 1 : 0;
}

FormalSum preorder_delta(const Preorder& p) {
  FormalSum out;
  for (const auto& q : contractions(p)) out.add(Term{galois_g(p, q), q}, 1);
  return out;
}

FormalSum preorder_coproduct(const Preorder& p, Mask s) {
  if (!contains(p.full(), s)) throw ValidationError("coproduct: subset outside the ground set");
  if (!p.is_downset(s)) return {};
  return FormalSum(Term{p.restricted(s), p.restricted(p.full() & ~s)});
}

FormalSum preorder_full_coproduct(const Preorder& p) {
  FormalSum out;
  for (Mask s = 0; s <= p.full(); ++s) out += preorder_coproduct(p, s);
  return out;
}

FormalSum delta_factor(const Factor& f, const GroundSet& ambient, Mask s) {
  Mask local = factor_ground(f).transfer(ambient, s);
  if (const auto* z = std::get_if<SubmodFn>(&f)) return coproduct_delta(*z, local);
  return preorder_coproduct(std::get<Preorder>(f), local);
}

FormalSum internal_delta_factor(const Factor& f) {
  if (const auto* z = std::get_if<SubmodFn>(&f)) return internal_delta(*z);
  return preorder_delta(std::get<Preorder>(f));
}

FormalSum phi_factor(const Factor& f) { return phi(std::get<SubmodFn>(f)); }

FormalSum psi_factor(const Factor& f) { return FormalSum(Term{psi(std::get<SubmodFn>(f))}); }

FormalSum eps_factor(const Factor& f) {
  return FormalSum(Term{}, counit_eps(std::get<SubmodFn>(f)));
}

}  // namespace egp
