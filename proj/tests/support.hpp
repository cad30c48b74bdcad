#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "egpkit/conform.hpp"
#include "egpkit/generators.hpp"
#include "egpkit/preorder.hpp"
#include "egpkit/submod_fn.hpp"

namespace egp {

inline void PrintTo(const SubmodFn& z, std::ostream* os) { *os << format_table(z); }
inline void PrintTo(const Preorder& p, std::ostream* os) { *os << p.format(); }

}  // namespace egp

namespace egp::test {

// Ground of single-letter labels; sets written as strings, e.g. {"ab", "3"}.
// Unlisted nonempty sets are infinite.
inline SubmodFn fn(const std::string& labels, const std::map<std::string, std::string>& finite) {
  std::vector<std::string> ls;
  for (char c : labels) ls.emplace_back(1, c);
  GroundSet g(ls);
  std::vector<std::pair<Mask, ExtendedValue>> entries;
  for (const auto& [set, v] : finite) {
    std::vector<std::string> members;
    for (char c : set) members.emplace_back(1, c);
    entries.emplace_back(g.mask_of(members), ExtendedValue::parse(v));
  }
  return SubmodFn::from_finite(g, entries);
}

inline Mask set(const GroundSet& g, const std::string& s) {
  std::vector<std::string> members;
  for (char c : s) members.emplace_back(1, c);
  return g.mask_of(members);
}

// "a<b<c" style chains and "a<b,c<b" lists; "ab" inside braces-free notation
// is not supported, use from_relations for bubbles.
inline Preorder rel(const GroundSet& g, const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string prev, cur;
  auto flush = [&](char sep) {
    if (!prev.empty() && !cur.empty()) pairs.emplace_back(prev, cur);
    prev = sep == '<' ? cur : "";
    cur.clear();
  };
  for (char c : text) {
    if (c == '<' || c == ',') flush(c);
    else if (c != ' ') cur += c;
  }
  flush(',');
  return Preorder::from_relations(g, pairs);
}

inline std::vector<std::string> keys(const std::vector<Preorder>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.canonical_key());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace egp::test
