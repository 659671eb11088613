#include "robba/tate_domains.hpp"

#include "robba/error.hpp"

#include <algorithm>

namespace robba {

// ---------------------------------------------------------------- Laurent

LaurentDomain::LaurentDomain(FieldPtr ctx) : ctx_(std::move(ctx)), t_exp_(ctx_->config().t_exponent) {}

CoeffElem LaurentDomain::from(const CoeffElem& x) const {
  check_same_field(x, zero(Rational(0)));
  for (const auto& [e, c] : x.terms()) {
    require(e.denominator() == 1, "bad_exponent",
            "Laurent coefficients need integer exponents, got t^" + robba::to_string(e));
  }
  return x;
}

CoeffElem LaurentDomain::zero(const Rational& prec) const { return CoeffElem::zero(ctx_, prec / t_exp_); }

CoeffElem LaurentDomain::one() const { return CoeffElem::constant(ctx_, 1); }

std::optional<CoeffElem> LaurentDomain::unit_of_norm(const Rational& e) const {
  const Rational k = e / t_exp_;
  if (k.denominator() != 1) return std::nullopt;
  return CoeffElem(ctx_, {{k, 1}}, k + ctx_->config().default_tprec);
}

// ---------------------------------------------------------------- Q_p

namespace {

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw_internal("unit not invertible modulo p^k");
  return mod_floor(old_s, m);
}

}  // namespace

PadicDomain::PadicDomain(int p, int default_prec) : p_(p), default_prec_(default_prec) {
  require(is_prime(p), "bad_config", "p must be prime");
  require(default_prec > 0, "bad_config", "p-adic precision must be positive");
}

BigInt PadicDomain::pow_p(int k) const {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= p_;
  return out;
}

PadicElem PadicDomain::normalize(BigInt n, int val, int prec) const {
  if (val >= prec) return {0, prec, prec};
  n = mod_floor(n, pow_p(prec - val));
  while (n != 0 && n % p_ == 0) {
    n /= p_;
    ++val;
  }
  if (n == 0 || val >= prec) return {0, prec, prec};
  return {n, val, prec};
}

PadicElem PadicDomain::make(const BigInt& n, int shift) const { return make(n, shift, default_prec_); }

PadicElem PadicDomain::make(const BigInt& n, int shift, int prec) const { return normalize(n, -shift, prec); }

PadicElem PadicDomain::zero(const Rational& prec) const {
  const int k = static_cast<int>(robba::ceil(prec));
  return {0, k, k};
}

PadicElem PadicDomain::add(const Elem& a, const Elem& b) const {
  const int prec = std::min(a.prec, b.prec);
  if (is_zero(a)) return truncate(b, Rational(prec));
  if (is_zero(b)) return truncate(a, Rational(prec));
  const int v = std::min(a.val, b.val);
  const BigInt n = a.unit * pow_p(a.val - v) + b.unit * pow_p(b.val - v);
  return normalize(n, v, prec);
}

PadicElem PadicDomain::neg(const Elem& a) const {
  if (is_zero(a)) return a;
  return normalize(-a.unit, a.val, a.prec);
}

PadicElem PadicDomain::mul(const Elem& a, const Elem& b) const {
  const int prec = std::min(a.prec + b.val, b.prec + a.val);
  if (is_zero(a) || is_zero(b)) return {0, prec, prec};
  return normalize(a.unit * b.unit, a.val + b.val, prec);
}

PadicElem PadicDomain::inv(const Elem& a) const {
  if (is_zero(a)) {
    throw_precondition("not_invertible", "p-adic element is zero at precision " + std::to_string(a.prec));
  }
  const int rel = a.prec - a.val;
  return normalize(inverse_mod(a.unit, pow_p(rel)), -a.val, rel - a.val);
}

NormExp PadicDomain::norm(const Elem& a) const {
  if (is_zero(a)) return NormExp::below(Rational(a.prec));
  return NormExp::exact(Rational(a.val));
}

PadicElem PadicDomain::truncate(const Elem& a, const Rational& prec) const {
  const int k = static_cast<int>(robba::ceil(prec));
  if (k >= a.prec) return a;
  return normalize(a.unit, a.val, k);
}

std::optional<PadicElem> PadicDomain::unit_of_norm(const Rational& e) const {
  if (e.denominator() != 1) return std::nullopt;
  const int k = static_cast<int>(e.numerator());
  return normalize(1, k, k + default_prec_);
}

std::string PadicDomain::to_string(const Elem& a) const {
  std::string out;
  if (!is_zero(a)) {
    out = a.unit.str();
    if (a.val != 0) out += "*" + std::to_string(p_) + "^" + (a.val < 0 ? "(" + std::to_string(a.val) + ")" : std::to_string(a.val));
    out += " + ";
  }
  return out + "O(" + std::to_string(p_) + "^" + std::to_string(a.prec) + ")";
}

}  // namespace robba
