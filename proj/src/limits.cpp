#include "egpkit/limits.hpp"

#include <string>

#include "egpkit/errors.hpp"

namespace egp {

Limits& limits() {
  static Limits l;
  return l;
}

void require_within(int n, int cap, const char* what) {
  if (n > kHardMaxGround)
    throw CapExceeded(std::string(what) + ": ground set of size " + std::to_string(n) +
                      " exceeds the hard cap " + std::to_string(kHardMaxGround));
  if (n > cap)
    throw CapExceeded(std::string(what) + ": ground set of size " + std::to_string(n) +
                      " exceeds the cap " + std::to_string(cap));
}

}  // namespace egp
