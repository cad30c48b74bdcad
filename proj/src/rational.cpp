#include "egpkit/rational.hpp"

#include <cctype>

#include "egpkit/errors.hpp"

namespace egp {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw ValidationError("not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Rational d{std::string(den)};
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational{n} / d;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace egp
