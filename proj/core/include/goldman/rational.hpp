#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace goldman {

/// Exact arbitrary-precision rational coefficient.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string rational_to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws parse_error on anything else.
Rational parse_rational(std::string_view text);

}  // namespace goldman
