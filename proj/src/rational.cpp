#include "threeterm/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace threeterm {

std::int64_t floor(const Rational& q) {
    // boost::rational keeps the denominator positive.
    std::int64_t n = q.numerator();
    std::int64_t d = q.denominator();
    std::int64_t f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos)
        throw std::invalid_argument("empty rational");
    std::string_view s = text.substr(first, last - first + 1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, text));
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace threeterm
