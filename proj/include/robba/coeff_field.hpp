// Truncated Hahn-style series over F_{q^m}: the desk-scale model of the
// perfectoid coefficient field L (the completed perfection of F_{q^m}((t)))
// together with its multiplicative norm |t| = p^{-t_exponent}.
#pragma once

#include "robba/finite_field.hpp"
#include "robba/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace robba {

struct FieldConfig {
  int p = 2;
  int q = 2;
  int m = 1;
  /// Irreducible polynomial over F_p of degree log_p(q) * m defining F_{q^m};
  /// empty selects the default table entry.
  FpPoly modulus;
  Rational t_exponent{1};
  Rational default_tprec{16};
};

/// Validated, immutable field data shared by every element.
class FieldContext {
 public:
  static std::shared_ptr<const FieldContext> create(FieldConfig config);

  const FieldConfig& config() const noexcept { return config_; }
  const FiniteField& fq() const noexcept { return fq_; }
  int p() const noexcept { return config_.p; }
  int q() const noexcept { return config_.q; }
  /// log_p(q).
  int q_log() const noexcept { return q_log_; }

  bool operator==(const FieldContext& other) const;

 private:
  FieldContext(FieldConfig config, FiniteField fq, int q_log)
      : config_(std::move(config)), fq_(std::move(fq)), q_log_(q_log) {}

  FieldConfig config_;
  FiniteField fq_;
  int q_log_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Norm exponent: the norm is p^{-e}. BelowPrecision(B) means "norm <= p^{-B},
/// possibly zero".
class NormExp {
 public:
  static NormExp exact(Rational e) { return NormExp(e, false); }
  static NormExp below(Rational bound) { return NormExp(bound, true); }

  bool is_below() const noexcept { return below_; }
  bool is_exact() const noexcept { return !below_; }
  /// Throws Indeterminate if below precision.
  const Rational& exponent() const;
  /// Exponent for exact values, the bound B for BelowPrecision.
  const Rational& value() const noexcept { return value_; }

  NormExp shifted(const Rational& delta) const { return NormExp(value_ + delta, below_); }

  std::string to_string() const;

  friend bool operator==(const NormExp&, const NormExp&) = default;

 private:
  NormExp(Rational v, bool below) : value_(v), below_(below) {}
  Rational value_;
  bool below_;
};

/// max of norms (min of exponents) over a family; exact when decidable,
/// otherwise BelowPrecision of the weakest bound.
NormExp norm_max(const NormExp& a, const NormExp& b);

/// Product of norms (sum of exponents).
NormExp norm_mul(const NormExp& a, const NormExp& b);

/// Three-way comparison of norms (not exponents): less means |a| < |b|.
/// Throws Indeterminate when BelowPrecision makes it undecidable.
std::strong_ordering compare_norms(const NormExp& a, const NormExp& b);

/// |a| <= |b|, throwing Indeterminate when undecidable.
bool norm_leq(const NormExp& a, const NormExp& b);

class CoeffElem {
 public:
  using Terms = std::map<Rational, FqElem>;

  /// Drops zero coefficients and terms at or beyond tprec. Throws
  /// Precondition if an exponent's denominator is not a power of p.
  CoeffElem(FieldPtr ctx, Terms terms, Rational tprec);

  static CoeffElem zero(FieldPtr ctx);
  static CoeffElem zero(FieldPtr ctx, Rational tprec);
  static CoeffElem constant(FieldPtr ctx, FqElem c);
  static CoeffElem monomial(FieldPtr ctx, FqElem c, Rational exponent);
  /// t^e with coefficient 1.
  static CoeffElem t_power(FieldPtr ctx, Rational exponent);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  const Rational& tprec() const noexcept { return tprec_; }

  /// No term survives at this precision.
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Least stored exponent; tprec when nothing is stored.
  Rational valuation() const noexcept;
  FqElem leading_coeff() const;
  /// All stored exponents >= 0 (element of O_L).
  bool is_integral() const noexcept;

  CoeffElem truncated(const Rational& prec) const;
  CoeffElem with_tprec(const Rational& prec) const { return truncated(prec); }
  CoeffElem scaled(FqElem c) const;
  /// Multiplication by t^e (exact shift of exponents and precision).
  CoeffElem shifted(const Rational& e) const;

  std::string to_string() const;

  friend bool operator==(const CoeffElem& a, const CoeffElem& b) {
    return a.terms_ == b.terms_ && a.tprec_ == b.tprec_;
  }

 private:
  FieldPtr ctx_;
  Terms terms_;
  Rational tprec_;
};

void check_same_field(const CoeffElem& x, const CoeffElem& y);

CoeffElem coeff_add(const CoeffElem& x, const CoeffElem& y);
CoeffElem coeff_sub(const CoeffElem& x, const CoeffElem& y);
CoeffElem coeff_neg(const CoeffElem& x);
CoeffElem coeff_mul(const CoeffElem& x, const CoeffElem& y);
/// Throws Precondition("not_invertible") when x is zero at its precision.
CoeffElem coeff_inv(const CoeffElem& x);
CoeffElem coeff_div(const CoeffElem& x, const CoeffElem& y);
CoeffElem coeff_pow(const CoeffElem& x, std::uint64_t n);
/// x^(p^k): exponents and precision scale by p^k, coefficients by Frobenius.
CoeffElem coeff_frobenius(const CoeffElem& x, int k);
/// The unique y with y^(p^k) = x, to precision tprec / p^k.
CoeffElem coeff_root_p_power(const CoeffElem& x, int k);
/// The unique y with y^q = x.
CoeffElem coeff_qth_root(const CoeffElem& x);
NormExp coeff_norm(const CoeffElem& x);

inline CoeffElem operator+(const CoeffElem& a, const CoeffElem& b) { return coeff_add(a, b); }
inline CoeffElem operator-(const CoeffElem& a, const CoeffElem& b) { return coeff_sub(a, b); }
inline CoeffElem operator-(const CoeffElem& a) { return coeff_neg(a); }
inline CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) { return coeff_mul(a, b); }

}  // namespace robba
