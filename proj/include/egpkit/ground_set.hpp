#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace egp {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask big, Mask small) { return (big & small) == small; }

// Gather the bits of m that lie in support into the low positions.
Mask compress(Mask m, Mask support);
// Inverse of compress: scatter the low bits of m onto the positions of support.
Mask expand(Mask m, Mask support);

// Ground set with labels kept in lexicographic order; bit i of a mask refers
// to labels()[i].
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  int index_of(const std::string& label) const;  // throws ValidationError
  bool has(const std::string& label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  GroundSet subset(Mask m) const;
  // Mask in *this of the labels named by m over other; labels absent here are dropped.
  Mask transfer(const GroundSet& other, Mask m) const;
  bool disjoint_from(const GroundSet& other) const;
  GroundSet merged(const GroundSet& other) const;

  std::string format(Mask m) const;  // "{a,b}"

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

// Partitions are lists of disjoint nonempty masks, kept in ascending order.
using Partition = std::vector<Mask>;
void canonicalize(Partition& p);

}  // namespace egp
