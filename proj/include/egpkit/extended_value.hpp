#pragma once

#include <compare>
#include <string>

#include "egpkit/rational.hpp"

namespace egp {

// An element of Q ∪ {∞}.
class ExtendedValue {
 public:
  ExtendedValue() = default;
  ExtendedValue(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit on purpose
  ExtendedValue(long v) : value_(v) {}                  // NOLINT
  ExtendedValue(int v) : value_(v) {}                   // NOLINT

  static ExtendedValue infinity() {
    ExtendedValue e;
    e.infinite_ = true;
    return e;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  const Rational& value() const;  // throws PreconditionError on ∞

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);
  // ∞ − finite = ∞; anything − ∞ is rejected.
  friend ExtendedValue operator-(const ExtendedValue& a, const ExtendedValue& b);

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

  std::string str() const;  // "3/2" or "inf"
  static ExtendedValue parse(const std::string& text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace egp
