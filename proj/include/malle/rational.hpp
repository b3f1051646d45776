#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace malle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.001".
Rational parse_rational(std::string_view text);

// Accepts plain integers and "10^k" / "1e7" shorthands.
BigInt parse_bigint(std::string_view text);

double to_double(const Rational& r);

}  // namespace malle
