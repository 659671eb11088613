#include "robba/gamma.hpp"

#include "robba/error.hpp"

#include <cstdlib>

namespace robba {

GammaValue GammaValue::operator*(const GammaValue& other) const {
  if (zero_ || other.zero_) return zero();
  return of(e_ + other.e_, k_ + other.k_);
}

GammaValue GammaValue::operator/(const GammaValue& other) const {
  if (other.zero_) throw_precondition("division_by_zero", "division by the zero value of Γ");
  if (zero_) return zero();
  return of(e_ - other.e_, k_ - other.k_);
}

GammaValue GammaValue::pow(std::int64_t n) const {
  if (zero_) {
    if (n < 0) throw_precondition("division_by_zero", "negative power of the zero value of Γ");
    return n == 0 ? of(Rational(0)) : zero();
  }
  return of(e_ * Rational(n), k_ * n);
}

std::strong_ordering GammaValue::operator<=>(const GammaValue& other) const {
  if (zero_ || other.zero_) return other.zero_ <=> zero_;
  if (e_ != other.e_) return e_ < other.e_ ? std::strong_ordering::greater : std::strong_ordering::less;
  return k_ <=> other.k_;
}

std::string GammaValue::to_string() const {
  if (zero_) return "0";
  return "(" + robba::to_string(e_) + ", " + std::to_string(k_) + ")";
}

const Rational& Radius::rho() const {
  if (zero_) throw_precondition("zero_radius", "the zero radius has no exponent");
  return rho_;
}

std::string Radius::to_string() const { return zero_ ? "inf" : robba::to_string(rho_); }

Radius Radius::parse(const std::string& text) {
  if (text == "inf") return zero();
  return exp(parse_rational(text));
}

std::strong_ordering Radius::operator<=>(const Radius& other) const {
  if (zero_ || other.zero_) return other.zero_ <=> zero_;
  if (rho_ == other.rho_) return std::strong_ordering::equal;
  return rho_ > other.rho_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool in_value_group(const Rational& rho, const FieldContext& field) {
  const auto& t_exp = field.config().t_exponent;
  const std::int64_t period = std::abs(t_exp.numerator());
  for (std::int64_t k = 0; k < period; ++k) {
    if (has_p_power_denominator((rho - Rational(k)) / t_exp, field.p())) return true;
  }
  return false;
}

bool admissible_center(const CoeffElem& u) {
  if (!u.is_integral()) return false;
  return u.is_zero() || coeff_norm(u).value() >= Rational(1);
}

void require_admissible_center(const CoeffElem& u) {
  require(admissible_center(u), "bad_center", "center " + u.to_string() + " must satisfy |u| <= p^-1");
}

}  // namespace robba
