// Exact rational exponents. All norm exponents, radii and valuations in the
// library are rationals; floating point never enters a result.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Under C++20 rewritten comparisons boost's mixed rational/integer operator==
// recurses into itself; these exact-match overloads take precedence.
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

namespace robba {

using Rational = boost::rational<std::int64_t>;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "a", "-a", "a/b". Throws Error(Parse) on malformed text.
Rational parse_rational(std::string_view text);

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

/// True iff the denominator of r is a power of p (including p^0).
bool has_p_power_denominator(const Rational& r, std::int64_t p);

/// k with denominator == p^k, or nullopt if the denominator is not a p-power.
std::optional<int> p_power_of_denominator(const Rational& r, std::int64_t p);

std::int64_t ipow(std::int64_t base, unsigned exp);

/// Removes every factor of p from n (n != 0).
std::int64_t strip_p(std::int64_t n, std::int64_t p);

}  // namespace robba
