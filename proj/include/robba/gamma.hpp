// The ordered group Γ = R_{>0} × Z (lexicographic), radii, and value-group
// membership for the configured coefficient field.
#pragma once

#include "robba/coeff_field.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace robba {

/// (e, k) stands for p^{-e}·(1^+)^k; `zero` is the absorbing value 0.
class GammaValue {
 public:
  static GammaValue zero() { return GammaValue(Rational(0), 0, true); }
  static GammaValue of(Rational e, std::int64_t k = 0) { return GammaValue(e, k, false); }
  static GammaValue one_plus() { return of(Rational(0), 1); }
  static GammaValue one_minus() { return of(Rational(0), -1); }

  bool is_zero() const noexcept { return zero_; }
  const Rational& e() const noexcept { return e_; }
  std::int64_t k() const noexcept { return k_; }

  GammaValue operator*(const GammaValue& other) const;
  /// Throws Precondition when dividing by zero.
  GammaValue operator/(const GammaValue& other) const;
  GammaValue pow(std::int64_t n) const;

  /// Larger means larger value: smaller e, then larger k; zero is least.
  std::strong_ordering operator<=>(const GammaValue& other) const;
  bool operator==(const GammaValue& other) const { return (*this <=> other) == 0; }

  std::string to_string() const;

 private:
  GammaValue(Rational e, std::int64_t k, bool zero) : e_(e), k_(zero ? 0 : k), zero_(zero) {
    if (zero) e_ = Rational(0);
  }
  Rational e_;
  std::int64_t k_;
  bool zero_;
};

/// A radius r in [0, 1]: either 0 or p^{-rho}.
class Radius {
 public:
  static Radius zero() { return Radius(Rational(0), true); }
  static Radius exp(Rational rho) { return Radius(rho, false); }

  bool is_zero() const noexcept { return zero_; }
  /// Throws Precondition for the zero radius.
  const Rational& rho() const;
  /// "inf" for r = 0, otherwise rho.
  std::string to_string() const;
  static Radius parse(const std::string& text);

  /// Ordered as radii: zero is least, larger rho means smaller radius.
  std::strong_ordering operator<=>(const Radius& other) const;
  bool operator==(const Radius& other) const { return (*this <=> other) == 0; }

 private:
  Radius(Rational rho, bool zero) : rho_(rho), zero_(zero) {}
  Rational rho_;
  bool zero_;
};

/// rho in Z + t_exponent·Z[1/p], i.e. p^{-rho-1} is the Gauss norm of some
/// element of W(O_L)_E.
bool in_value_group(const Rational& rho, const FieldContext& field);

/// |u| <= p^{-1} and u integral.
bool admissible_center(const CoeffElem& u);
void require_admissible_center(const CoeffElem& u);

}  // namespace robba
