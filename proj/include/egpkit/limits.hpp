#pragma once

namespace egp {

inline constexpr int kHardMaxGround = 20;

struct Limits {
  int max_n = 12;               // soft cap for enumeration-heavy operations
  int max_all_preorders = 6;    // full preorder enumeration
  int max_total_preorders = 8;  // ordered set partitions
};

// Process-wide soft caps. The CLI adjusts these from --max-n / EGPKIT_MAX_N
// before doing any work; library code only reads them.
Limits& limits();

// Throws CapExceeded when n > cap (or n > the hard cap).
void require_within(int n, int cap, const char* what);

}  // namespace egp
