#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace transit {

// Exact distances and radii. No floating point anywhere in the deciders.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-2", "3/2". Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace transit
