#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace kfu {

using Rational = boost::rational<std::int64_t>;

/// Canonical text form "p/q" (q >= 1, gcd-reduced), also for integers.
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace kfu
