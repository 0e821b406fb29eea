#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost <= 1.74 defines rational == integer in terms of itself; under C++20's
// reversed-operator rules that recurses forever. Exact non-template overloads
// win overload resolution (and are found by ADL), so mixed comparisons are safe.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, long long b) {
    return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace threeterm {

using Rational = boost::rational<std::int64_t>;

/// Largest integer not exceeding q.
std::int64_t floor(const Rational& q);

/// Fractional part {q} = q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

/// Lowest-terms "p/q"; integers print without a denominator ("3", "-1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace threeterm
