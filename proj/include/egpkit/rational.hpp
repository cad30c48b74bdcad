#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace egp {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p", "-p", "p/q". Throws ValidationError otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace egp
