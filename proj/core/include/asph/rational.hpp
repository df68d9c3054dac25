#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

// Boost 1.74 under C++20: the reversed equality candidates from boost::operators recurse
// forever for rational == integer.  Exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, const long long& b)
{
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<long long>& a, const int& b) { return a == static_cast<long long>(b); }
}  // namespace boost

namespace asph {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q".
Rational parse_rational(std::string_view text);

}  // namespace asph
