#include "egpkit/ground_set.hpp"

#include <algorithm>

#include "egpkit/errors.hpp"
#include "egpkit/limits.hpp"

namespace egp {

Mask compress(Mask m, Mask support) {
  Mask out = 0;
  int k = 0;
  for (Mask s = support; s; s &= s - 1, ++k)
    if (m & s & -s) out |= Mask{1} << k;
  return out;
}

Mask expand(Mask m, Mask support) {
  Mask out = 0;
  int k = 0;
  for (Mask s = support; s; s &= s - 1, ++k)
    if (m >> k & 1) out |= s & -s;
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw ValidationError("duplicate label in ground set");
  for (const auto& l : labels_)
    if (l.empty()) throw ValidationError("empty label in ground set");
  if (size() > kHardMaxGround)
    throw CapExceeded("ground set of size " + std::to_string(size()) + " exceeds the hard cap " +
                      std::to_string(kHardMaxGround));
}

int GroundSet::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw ValidationError("unknown label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

bool GroundSet::has(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Mask{1} << index_of(l);
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (m >> i & 1) out.push_back(labels_[i]);
  return out;
}

GroundSet GroundSet::subset(Mask m) const { return GroundSet(labels_of(m)); }

Mask GroundSet::transfer(const GroundSet& other, Mask m) const {
  Mask out = 0;
  for (int i = 0; i < other.size(); ++i)
    if (m >> i & 1) {
      auto it = std::lower_bound(labels_.begin(), labels_.end(), other.label(i));
      if (it != labels_.end() && *it == other.label(i)) out |= Mask{1} << (it - labels_.begin());
    }
  return out;
}

bool GroundSet::disjoint_from(const GroundSet& other) const {
  for (const auto& l : other.labels_)
    if (has(l)) return false;
  return true;
}

GroundSet GroundSet::merged(const GroundSet& other) const {
  std::vector<std::string> all = labels_;
  all.insert(all.end(), other.labels_.begin(), other.labels_.end());
  return GroundSet(std::move(all));
}

std::string GroundSet::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    if (m >> i & 1) {
      if (!first) s += ',';
      s += labels_[i];
      first = false;
    }
  return s + "}";
}

void canonicalize(Partition& p) {
  std::erase(p, Mask{0});
  std::sort(p.begin(), p.end());
}

}  // namespace egp
