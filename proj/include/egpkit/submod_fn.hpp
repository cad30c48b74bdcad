#pragma once

#include <span>
#include <string>
#include <vector>

#include "egpkit/extended_value.hpp"
#include "egpkit/ground_set.hpp"

namespace egp {

// A table of 2^n extended values indexed by subset masks, with z(∅) = 0 and
// z(I) finite. Construction checks only that shape; use checked() to also
// require submodularity.
class SubmodFn {
 public:
  SubmodFn() : table_{ExtendedValue{0}} {}
  SubmodFn(GroundSet ground, std::vector<ExtendedValue> table);

  static SubmodFn checked(GroundSet ground, std::vector<ExtendedValue> table);
  // Unlisted nonempty subsets are ∞; ∅ may only be listed with value 0.
  static SubmodFn from_finite(GroundSet ground,
                              const std::vector<std::pair<Mask, ExtendedValue>>& entries);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }

  const ExtendedValue& operator()(Mask m) const { return table_[m]; }
  const ExtendedValue& at(Mask m) const;
  bool finite_at(Mask m) const { return table_[m].is_finite(); }
  std::span<const ExtendedValue> table() const { return table_; }

  bool is_finite() const;  // no ∞ anywhere
  std::string canonical_key() const;

  friend bool operator==(const SubmodFn&, const SubmodFn&) = default;

 private:
  GroundSet ground_;
  std::vector<ExtendedValue> table_;
};

bool is_submodular(const SubmodFn& z);
// Equality of the modular law on the finite-valued sets (which form a topology
// for submodular z).
bool is_modular(const SubmodFn& z);

SubmodFn restrict(const SubmodFn& z, Mask s);
SubmodFn corestrict(const SubmodFn& z, Mask s);
SubmodFn product(const SubmodFn& u, const SubmodFn& v);

// z(I) = z(C1) + z(C2), both finite.
bool splits_along(const SubmodFn& z, Mask c1);

struct Decomposition {
  Partition blocks;               // over z's ground
  std::vector<SubmodFn> factors;  // restrict(z, block), same order
};
Decomposition decompose(const SubmodFn& z);
Partition ctop_components(const SubmodFn& z);

// Throws ValidationError on ground mismatch.
bool zfn_equal(const SubmodFn& u, const SubmodFn& v);

std::string format_table(const SubmodFn& z);

}  // namespace egp
