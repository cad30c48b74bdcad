#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "egpkit/ground_set.hpp"

namespace egp {

// A reflexive transitive relation. below(j) is the mask {i : i ≤ j}.
class Preorder {
 public:
  Preorder() = default;
  static Preorder discrete(GroundSet ground);
  static Preorder coarse(GroundSet ground);
  // Reflexive-transitive closure of the given rows (row j = elements declared ≤ j).
  static Preorder from_below(GroundSet ground, std::vector<Mask> below);
  static Preorder from_relations(GroundSet ground,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);
  // Bubbles listed bottom to top.
  static Preorder total(GroundSet ground, const std::vector<Mask>& levels);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Mask full() const { return ground_.full(); }

  bool leq(int i, int j) const { return below_[j] >> i & 1; }
  bool less(int i, int j) const { return leq(i, j) && !leq(j, i); }
  Mask below(int j) const { return below_[j]; }
  Mask above(int i) const;
  const std::vector<Mask>& rows() const { return below_; }

  Mask down_closure(Mask m) const;
  Mask up_closure(Mask m) const;
  bool is_downset(Mask m) const { return down_closure(m) == m; }
  bool is_upset(Mask m) const { return up_closure(m) == m; }
  bool is_convex(Mask m) const { return (down_closure(m) & up_closure(m)) == m; }

  // this ⪯ q: every relation of this holds in q.
  bool refines(const Preorder& q) const;
  bool is_total() const;
  bool is_poset() const;
  bool is_connected() const;

  // Induced preorder on s, relabelled to the labels of s.
  Preorder restricted(Mask s) const;
  // Strict pairs x < y and bubble pairs x ≤ y, x ≠ y, as label pairs.
  std::vector<std::pair<std::string, std::string>> relations() const;

  std::string canonical_key() const;
  std::string format() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;
  friend auto operator<=>(const Preorder& a, const Preorder& b) { return a.below_ <=> b.below_; }

 private:
  GroundSet ground_;
  std::vector<Mask> below_;
};

struct DownSetFamily {
  GroundSet ground;
  std::vector<Mask> sets;  // ascending
  friend bool operator==(const DownSetFamily&, const DownSetFamily&) = default;
};

DownSetFamily downsets(const Preorder& p);
// Throws ValidationError unless the family contains ∅, I and is closed under ∪, ∩.
Preorder preo_of(const DownSetFamily& t);

Partition bubbles(const Preorder& p);
Partition components(const Preorder& p);
// The preorder whose classes are the given partition blocks (an equivalence).
Preorder equivalence(const GroundSet& g, const Partition& blocks);

Preorder meet(const Preorder& p, const Preorder& q);
Preorder join(const Preorder& p, const Preorder& q);
Preorder opposite(const Preorder& p);

Preorder galois_f(const Preorder& p, const Preorder& r);  // P ∨ R^op, needs R ⪯ P
Preorder galois_g(const Preorder& p, const Preorder& q);  // P ∧ Q^op, needs P ⪯ Q

// R ◁ P. Fixpoint test R = P ∧ (P^op ∨ R); false when R ⋠ P.
bool is_subdivision(const Preorder& r, const Preorder& p);
bool is_subdivision_admissible(const Preorder& r, const Preorder& p);
bool is_subdivision_convex(const Preorder& r, const Preorder& p);

// P ◀ Q. Runs the cover-witness test and the fixpoint test Q = P ∨ (P^op ∧ Q)
// and throws InternalError if they disagree.
bool is_contraction(const Preorder& p, const Preorder& q);
bool is_contraction_by_covers(const Preorder& p, const Preorder& q);
bool is_contraction_fixpoint(const Preorder& p, const Preorder& q);

std::vector<Preorder> subdivisions(const Preorder& p);
std::vector<Preorder> contractions(const Preorder& p);

// Canonically sorted, duplicate free.
std::vector<Preorder> enumerate_preorders(const GroundSet& g);
std::vector<Preorder> enumerate_total_preorders(const GroundSet& g);
// Visits every ordered set partition (levels bottom to top).
void for_each_total_preorder(const GroundSet& g,
                             const std::function<void(const std::vector<Mask>&)>& visit);

std::vector<Preorder> linear_extensions(const Preorder& p);
// {D ∩ U : D down-set, U up-set}, nonempty, ascending.
std::vector<Mask> convex_subsets(const Preorder& p);

// Longest strict chain of bubbles minus one (0 for antichains of bubbles).
int rank(const Preorder& p);

}  // namespace egp
