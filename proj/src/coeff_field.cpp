#include "robba/coeff_field.hpp"

#include "robba/error.hpp"

#include <algorithm>

namespace robba {

// ---------------------------------------------------------------- context

std::shared_ptr<const FieldContext> FieldContext::create(FieldConfig config) {
  require(is_prime(config.p), "bad_config", "p must be prime");
  int q_log = 0;
  for (std::int64_t v = config.q; v > 1; v /= config.p) {
    require(v % config.p == 0, "bad_config", "q must be a power of p");
    ++q_log;
  }
  require(q_log >= 1, "bad_config", "q must be a positive power of p");
  require(config.m >= 1, "bad_config", "m must be positive");
  require(config.t_exponent > 0, "bad_config", "t_exponent must be positive");
  require(config.default_tprec > 0, "bad_config", "default_tprec must be positive");
  const int degree = q_log * config.m;
  if (config.modulus.empty()) config.modulus = default_modulus(config.p, degree);
  FiniteField fq(config.p, config.modulus);
  require(fq.degree() == degree, "bad_config",
          "modulus degree must equal log_p(q) * m = " + std::to_string(degree));
  config.modulus = fq.modulus();
  return std::shared_ptr<const FieldContext>(new FieldContext(std::move(config), std::move(fq), q_log));
}

bool FieldContext::operator==(const FieldContext& other) const {
  return config_.p == other.config_.p && config_.q == other.config_.q && config_.m == other.config_.m &&
         config_.modulus == other.config_.modulus && config_.t_exponent == other.config_.t_exponent;
}

// ---------------------------------------------------------------- norms

const Rational& NormExp::exponent() const {
  if (below_) throw_indeterminate("norm is below precision p^-" + robba::to_string(value_));
  return value_;
}

std::string NormExp::to_string() const {
  return below_ ? "below:" + robba::to_string(value_) : robba::to_string(value_);
}

NormExp norm_max(const NormExp& a, const NormExp& b) {
  if (a.is_exact() && b.is_exact()) return NormExp::exact(std::min(a.value(), b.value()));
  if (a.is_below() && b.is_below()) return NormExp::below(std::min(a.value(), b.value()));
  const auto& exact = a.is_exact() ? a : b;
  const auto& below = a.is_exact() ? b : a;
  if (exact.value() <= below.value()) return exact;
  return below;
}

NormExp norm_mul(const NormExp& a, const NormExp& b) {
  const Rational sum = a.value() + b.value();
  return (a.is_below() || b.is_below()) ? NormExp::below(sum) : NormExp::exact(sum);
}

std::strong_ordering compare_norms(const NormExp& a, const NormExp& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.value() == b.value()) return std::strong_ordering::equal;
    return a.value() > b.value() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_exact() && b.is_below() && a.value() <= b.value()) return std::strong_ordering::greater;
  if (b.is_exact() && a.is_below() && b.value() <= a.value()) return std::strong_ordering::less;
  throw_indeterminate("cannot compare norms " + a.to_string() + " and " + b.to_string());
}

bool norm_leq(const NormExp& a, const NormExp& b) {
  if (a.is_below() && b.is_exact() && a.value() >= b.value()) return true;
  return compare_norms(a, b) != std::strong_ordering::greater;
}

// ---------------------------------------------------------------- elements

CoeffElem::CoeffElem(FieldPtr ctx, Terms terms, Rational tprec)
    : ctx_(std::move(ctx)), tprec_(tprec) {
  const auto p = ctx_->p();
  for (auto& [e, c] : terms) {
    if (c == 0 || e >= tprec) continue;
    if (!has_p_power_denominator(e, p)) {
      throw_precondition("bad_exponent", "exponent " + robba::to_string(e) + " has non-p-power denominator");
    }
    terms_.emplace(e, c);
  }
}

CoeffElem CoeffElem::zero(FieldPtr ctx) {
  auto prec = ctx->config().default_tprec;
  return CoeffElem(std::move(ctx), {}, prec);
}

CoeffElem CoeffElem::zero(FieldPtr ctx, Rational tprec) { return CoeffElem(std::move(ctx), {}, tprec); }

CoeffElem CoeffElem::constant(FieldPtr ctx, FqElem c) { return monomial(std::move(ctx), c, Rational(0)); }

CoeffElem CoeffElem::monomial(FieldPtr ctx, FqElem c, Rational exponent) {
  auto prec = ctx->config().default_tprec;
  return CoeffElem(std::move(ctx), {{exponent, c}}, prec);
}

CoeffElem CoeffElem::t_power(FieldPtr ctx, Rational exponent) { return monomial(std::move(ctx), 1, exponent); }

Rational CoeffElem::valuation() const noexcept { return terms_.empty() ? tprec_ : terms_.begin()->first; }

FqElem CoeffElem::leading_coeff() const {
  if (terms_.empty()) throw_indeterminate("leading coefficient of an element that is zero at precision");
  return terms_.begin()->second;
}

bool CoeffElem::is_integral() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }

CoeffElem CoeffElem::truncated(const Rational& prec) const {
  if (prec >= tprec_) return *this;
  CoeffElem out = *this;
  out.tprec_ = prec;
  out.terms_.erase(out.terms_.lower_bound(prec), out.terms_.end());
  return out;
}

CoeffElem CoeffElem::scaled(FqElem c) const {
  Terms out;
  for (const auto& [e, a] : terms_) out.emplace(e, ctx_->fq().mul(a, c));
  return CoeffElem(ctx_, std::move(out), tprec_);
}

CoeffElem CoeffElem::shifted(const Rational& delta) const {
  Terms out;
  for (const auto& [e, a] : terms_) out.emplace(e + delta, a);
  return CoeffElem(ctx_, std::move(out), tprec_ + delta);
}

namespace {

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "t";
  if (e.denominator() == 1 && e >= 0) return "t^" + to_string(e);
  return "t^(" + to_string(e) + ")";
}

}  // namespace

std::string CoeffElem::to_string() const {
  const auto& fq = ctx_->fq();
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string coeff = fq.to_string(c);
    const bool compound = coeff.find('+') != std::string::npos;
    if (e == 0) {
      out += compound ? "(" + coeff + ")" : coeff;
      continue;
    }
    if (c != 1) out += (compound ? "(" + coeff + ")" : coeff) + "*";
    out += exponent_suffix(e);
  }
  if (tprec_ != ctx_->config().default_tprec || terms_.empty()) {
    if (!out.empty()) out += " + ";
    out += "O(" + exponent_suffix(tprec_) + ")";
  }
  return out;
}

void check_same_field(const CoeffElem& x, const CoeffElem& y) {
  if (x.ctx() != y.ctx() && !(*x.ctx() == *y.ctx())) {
    throw_precondition("config_mismatch", "coefficient elements come from different fields");
  }
}

CoeffElem coeff_add(const CoeffElem& x, const CoeffElem& y) {
  check_same_field(x, y);
  const auto& fq = x.ctx()->fq();
  auto terms = x.terms();
  for (const auto& [e, c] : y.terms()) {
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) it->second = fq.add(it->second, c);
  }
  return CoeffElem(x.ctx(), std::move(terms), std::min(x.tprec(), y.tprec()));
}

CoeffElem coeff_neg(const CoeffElem& x) {
  const auto& fq = x.ctx()->fq();
  CoeffElem::Terms terms;
  for (const auto& [e, c] : x.terms()) terms.emplace(e, fq.neg(c));
  return CoeffElem(x.ctx(), std::move(terms), x.tprec());
}

CoeffElem coeff_sub(const CoeffElem& x, const CoeffElem& y) { return coeff_add(x, coeff_neg(y)); }

CoeffElem coeff_mul(const CoeffElem& x, const CoeffElem& y) {
  check_same_field(x, y);
  const auto& fq = x.ctx()->fq();
  const Rational prec = std::min(x.tprec() + y.valuation(), y.tprec() + x.valuation());
  CoeffElem::Terms terms;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      const Rational e = ex + ey;
      if (e >= prec) break;
      auto [it, inserted] = terms.emplace(e, fq.mul(cx, cy));
      if (!inserted) it->second = fq.add(it->second, fq.mul(cx, cy));
    }
  }
  return CoeffElem(x.ctx(), std::move(terms), prec);
}

CoeffElem coeff_inv(const CoeffElem& x) {
  if (x.is_zero()) {
    throw_precondition("not_invertible", "element is indistinguishable from 0 at precision " + to_string(x.tprec()));
  }
  const auto& ctx = x.ctx();
  const auto& fq = ctx->fq();
  const Rational v = x.valuation();
  const FqElem c_inv = fq.inv(x.leading_coeff());
  const Rational rel = x.tprec() - v;
  // x = c t^v (1 + h) with h of positive valuation; 1/(1+h) = sum (-h)^k.
  CoeffElem h = coeff_sub(x.shifted(-v).scaled(c_inv), CoeffElem::constant(ctx, 1)).truncated(rel);
  CoeffElem neg_h = coeff_neg(h);
  CoeffElem sum = CoeffElem::constant(ctx, 1).truncated(rel);
  CoeffElem term = sum;
  while (true) {
    term = coeff_mul(term, neg_h).truncated(rel);
    if (term.is_zero()) break;
    sum = coeff_add(sum, term);
  }
  return CoeffElem(ctx, sum.terms(), rel).scaled(c_inv).shifted(-v);
}

CoeffElem coeff_div(const CoeffElem& x, const CoeffElem& y) { return coeff_mul(x, coeff_inv(y)); }

CoeffElem coeff_pow(const CoeffElem& x, std::uint64_t n) {
  CoeffElem result = CoeffElem::constant(x.ctx(), 1);
  CoeffElem base = x;
  while (n > 0) {
    if (n & 1u) result = coeff_mul(result, base);
    n >>= 1u;
    if (n > 0) base = coeff_mul(base, base);
  }
  return result;
}

CoeffElem coeff_frobenius(const CoeffElem& x, int k) {
  const auto& fq = x.ctx()->fq();
  const Rational scale(ipow(x.ctx()->p(), static_cast<unsigned>(k)));
  CoeffElem::Terms terms;
  for (const auto& [e, c] : x.terms()) terms.emplace(e * scale, fq.frobenius(c, k));
  return CoeffElem(x.ctx(), std::move(terms), x.tprec() * scale);
}

CoeffElem coeff_root_p_power(const CoeffElem& x, int k) {
  const auto& fq = x.ctx()->fq();
  const Rational scale(ipow(x.ctx()->p(), static_cast<unsigned>(k)));
  CoeffElem::Terms terms;
  for (const auto& [e, c] : x.terms()) terms.emplace(e / scale, fq.frobenius_inverse(c, k));
  return CoeffElem(x.ctx(), std::move(terms), x.tprec() / scale);
}

CoeffElem coeff_qth_root(const CoeffElem& x) { return coeff_root_p_power(x, x.ctx()->q_log()); }

NormExp coeff_norm(const CoeffElem& x) {
  const auto& t_exp = x.ctx()->config().t_exponent;
  if (x.is_zero()) return NormExp::below(t_exp * x.tprec());
  return NormExp::exact(t_exp * x.valuation());
}

}  // namespace robba
