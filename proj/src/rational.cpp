#include "robba/rational.hpp"

#include "robba/error.hpp"

#include <charconv>
#include <limits>

namespace robba {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorCategory::Parse, "bad_rational",
                "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCategory::Parse, "bad_rational", "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::int64_t floor(const Rational& r) {
  auto q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  auto q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

std::optional<int> p_power_of_denominator(const Rational& r, std::int64_t p) {
  auto d = r.denominator();
  int k = 0;
  while (d % p == 0) {
    d /= p;
    ++k;
  }
  if (d != 1) return std::nullopt;
  return k;
}

bool has_p_power_denominator(const Rational& r, std::int64_t p) {
  return p_power_of_denominator(r, p).has_value();
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && std::abs(result) > std::numeric_limits<std::int64_t>::max() / std::abs(base)) {
      throw_internal("integer power overflow");
    }
    result *= base;
  }
  return result;
}

std::int64_t strip_p(std::int64_t n, std::int64_t p) {
  if (n == 0) return 0;
  while (n % p == 0) n /= p;
  return n;
}

}  // namespace robba
