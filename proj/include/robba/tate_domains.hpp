// Coefficient domains for weighted Tate algebras: a normed ring with a
// discrete value group, a Euclidean degree on its integral subring and a
// distinguished topologically nilpotent element.
#pragma once

#include "robba/coeff_field.hpp"
#include "robba/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <optional>
#include <string>

namespace robba {

using BigInt = boost::multiprecision::cpp_int;

/// Norms are reported as exponents (|a| = p^{-e}); precision is the exponent
/// below which an element is unknown.
template <class D>
concept CoeffDomain = requires(const D& d, const typename D::Elem& a, const typename D::Elem& b,
                               const Rational& e) {
  { d.p() } -> std::convertible_to<int>;
  { d.zero(e) } -> std::same_as<typename D::Elem>;
  { d.one() } -> std::same_as<typename D::Elem>;
  { d.add(a, b) } -> std::same_as<typename D::Elem>;
  { d.sub(a, b) } -> std::same_as<typename D::Elem>;
  { d.neg(a) } -> std::same_as<typename D::Elem>;
  { d.mul(a, b) } -> std::same_as<typename D::Elem>;
  { d.inv(a) } -> std::same_as<typename D::Elem>;
  { d.is_zero(a) } -> std::same_as<bool>;
  { d.norm(a) } -> std::same_as<NormExp>;
  { d.precision(a) } -> std::same_as<Rational>;
  { d.truncate(a, e) } -> std::same_as<typename D::Elem>;
  { d.value_group_generator() } -> std::same_as<Rational>;
  { d.unit_of_norm(e) } -> std::same_as<std::optional<typename D::Elem>>;
  { d.degree(a) } -> std::same_as<Rational>;
  { d.varpi() } -> std::same_as<typename D::Elem>;
  { d.to_string(a) } -> std::same_as<std::string>;
};

/// True iff e is an integer multiple of the domain's value group generator.
template <CoeffDomain D>
bool in_value_group(const D& d, const Rational& e) {
  return (e / d.value_group_generator()).denominator() == 1;
}

// ---------------------------------------------------------------- F_q((t))

/// Truncated Laurent series F_{q^m}((t)) with integer exponents, |t| =
/// p^{-t_exponent}. Euclidean degree on F_{q^m}[[t]] is the t-adic order.
class LaurentDomain {
 public:
  using Elem = CoeffElem;

  explicit LaurentDomain(FieldPtr ctx);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  /// Rejects non-integer exponents.
  Elem from(const CoeffElem& x) const;

  int p() const noexcept { return ctx_->p(); }
  Elem zero(const Rational& prec) const;
  Elem one() const;
  Elem add(const Elem& a, const Elem& b) const { return coeff_add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return coeff_sub(a, b); }
  Elem neg(const Elem& a) const { return coeff_neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return coeff_mul(a, b); }
  Elem inv(const Elem& a) const { return coeff_inv(a); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  NormExp norm(const Elem& a) const { return coeff_norm(a); }
  Rational precision(const Elem& a) const { return a.tprec() * t_exp_; }
  Elem truncate(const Elem& a, const Rational& prec) const { return a.truncated(prec / t_exp_); }
  Rational value_group_generator() const { return t_exp_; }
  /// t^k with k * t_exponent = e, when k is an integer.
  std::optional<Elem> unit_of_norm(const Rational& e) const;
  Rational degree(const Elem& a) const { return a.valuation(); }
  Elem varpi() const { return CoeffElem::t_power(ctx_, 1); }
  std::string to_string(const Elem& a) const { return a.to_string(); }

 private:
  FieldPtr ctx_;
  Rational t_exp_;
};

// ---------------------------------------------------------------- Q_p

/// p^val * unit with unit prime to p, known modulo p^prec. Zero at precision
/// has unit 0 and val == prec.
struct PadicElem {
  BigInt unit;
  int val = 0;
  int prec = 0;

  friend bool operator==(const PadicElem&, const PadicElem&) = default;
};

/// Truncated Q_p with absolute precision; Euclidean degree on Z_p is the
/// valuation.
class PadicDomain {
 public:
  using Elem = PadicElem;

  PadicDomain(int p, int default_prec);

  /// n / p^shift known to absolute precision prec.
  Elem make(const BigInt& n, int shift = 0) const;
  Elem make(const BigInt& n, int shift, int prec) const;

  int p() const noexcept { return p_; }
  int default_prec() const noexcept { return default_prec_; }
  Elem zero(const Rational& prec) const;
  Elem one() const { return make(1); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a.unit == 0; }
  NormExp norm(const Elem& a) const;
  Rational precision(const Elem& a) const { return Rational(a.prec); }
  Elem truncate(const Elem& a, const Rational& prec) const;
  Rational value_group_generator() const { return Rational(1); }
  std::optional<Elem> unit_of_norm(const Rational& e) const;
  Rational degree(const Elem& a) const { return Rational(a.val); }
  Elem varpi() const { return make(p_); }
  std::string to_string(const Elem& a) const;

 private:
  Elem normalize(BigInt n, int val, int prec) const;
  BigInt pow_p(int k) const;

  int p_;
  int default_prec_;
};

static_assert(CoeffDomain<LaurentDomain>);
static_assert(CoeffDomain<PadicDomain>);

}  // namespace robba
