// numbers.hpp
// Exact integer/rational arithmetic used everywhere a count or density is
// reported. Counts and densities are never floats; decimals appear only in
// presentation helpers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace indpath {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(int n, int k);   // 0 for k < 0 or k > n
Int ipow(const Int& base, int e);

// "p/q" with q > 0, reduced; integers render as "p/1"
std::string rat_str(const Rat& r);

// parse "p", "p/q", or a plain decimal like "0.19356"; throws Error(ParseError)
Rat parse_rat(const std::string& s);

// shortest-ish decimal with `digits` significant digits, for human tables only
std::string rat_decimal(const Rat& r, int digits = 6);

}  // namespace indpath
