#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bassinv {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses `n` or `n/d` (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// `n` for integers, `n/d` otherwise.
std::string to_string(const Rational& value);

}  // namespace bassinv
