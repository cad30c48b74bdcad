#include "egpkit/extended_value.hpp"

#include "egpkit/errors.hpp"

namespace egp {

const Rational& ExtendedValue::value() const {
  if (infinite_) throw PreconditionError("value() of infinity");
  return value_;
}

ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.infinite_ || b.infinite_) return ExtendedValue::infinity();
  return ExtendedValue(a.value_ + b.value_);
}

ExtendedValue operator-(const ExtendedValue& a, const ExtendedValue& b) {
  if (b.infinite_) throw PreconditionError("subtracting infinity");
  if (a.infinite_) return ExtendedValue::infinity();
  return ExtendedValue(a.value_ - b.value_);
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtendedValue::str() const { return infinite_ ? "inf" : to_string(value_); }

ExtendedValue ExtendedValue::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return ExtendedValue(parse_rational(text));
}

}  // namespace egp
