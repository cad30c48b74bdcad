#pragma once

#include <stdexcept>
#include <string>

namespace egp {

// Bad input: malformed tables, unknown labels, invalid matroids, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnboundedDirection : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two independent computations that must agree did not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define EGP_CHECK(cond, msg)                                              \
  do {                                                                    \
    if (!(cond)) throw ::egp::InternalError(std::string("check failed: ") \
                                            + #cond + ": " + (msg));      \
  } while (0)

}  // namespace egp
