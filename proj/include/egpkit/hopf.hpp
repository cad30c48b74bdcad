#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "egpkit/preorder.hpp"
#include "egpkit/rational.hpp"
#include "egpkit/submod_fn.hpp"

namespace egp {

using Factor = std::variant<SubmodFn, Preorder>;
// A tensor of factors; the empty term is the scalar 1.
using Term = std::vector<Factor>;

std::string factor_key(const Factor& f);
const GroundSet& factor_ground(const Factor& f);
std::string format_factor(const Factor& f);

// Finite ℚ-linear combination of terms. Terms are identified by the keys of
// their factors, so equal tables over equal labels collapse.
class FormalSum {
 public:
  struct Entry {
    Term term;
    Rational coeff;
  };

  FormalSum() = default;
  explicit FormalSum(Term t, Rational c = 1);

  void add(Term t, const Rational& c);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum scaled(const Rational& c) const;

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational coefficient(const Term& t) const;
  const std::map<std::string, Entry>& entries() const { return entries_; }

  // Replaces factor `slot` of every term by the terms of f(factor), in place.
  FormalSum apply_slot(std::size_t slot, const std::function<FormalSum(const Factor&)>& f) const;
  // New term i is old term order[i].
  FormalSum permuted(const std::vector<std::size_t>& order) const;
  // Multiplies factor j into factor i (i < j) and drops slot j.
  FormalSum multiply_slots(std::size_t i, std::size_t j) const;

  std::string format() const;

  friend bool operator==(const FormalSum& a, const FormalSum& b);

 private:
  std::map<std::string, Entry> entries_;
};

std::string term_key(const Term& t);
FormalSum tensor(const FormalSum& a, const FormalSum& b);
// Slotwise product μ of two sums whose terms have the same arity.
FormalSum multiply(const FormalSum& a, const FormalSum& b);

Preorder disjoint_union(const Preorder& p, const Preorder& q);
Factor multiply(const Factor& a, const Factor& b);

FormalSum coproduct_delta(const SubmodFn& z, Mask s);  // Δ_{S,T}
FormalSum full_coproduct(const SubmodFn& z);          // Σ_S Δ_{S,T}
FormalSum internal_delta(const SubmodFn& z);          // Σ_{P ∈ Pre(z)} z_P ⊗ z^P
FormalSum phi(const SubmodFn& z);                     // Σ_{P ∈ minPre(z)} z^P
Preorder psi(const SubmodFn& z);                      // pre(z), z modular
Rational counit_eps(const SubmodFn& z);               // z modular

bool is_totally_disconnected(const Preorder& p);

FormalSum preorder_delta(const Preorder& p);               // Σ_{P◀Q} (P ∧ Q^op) ⊗ Q
FormalSum preorder_coproduct(const Preorder& p, Mask s);  // P|_S ⊗ P|_{S^c} if S is a down-set
FormalSum preorder_full_coproduct(const Preorder& p);

// Factor-wise maps lifted to sums, for use with apply_slot.
// Δ_{S,T} with S = the labels of s over `ambient` that lie in the factor.
FormalSum delta_factor(const Factor& f, const GroundSet& ambient, Mask s);
FormalSum internal_delta_factor(const Factor& f);
FormalSum phi_factor(const Factor& f);
FormalSum psi_factor(const Factor& f);
FormalSum eps_factor(const Factor& f);

}  // namespace egp
