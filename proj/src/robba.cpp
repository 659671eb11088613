#include "robba/robba.hpp"

#include "robba/error.hpp"

#include <algorithm>

namespace robba {

IntervalExp::IntervalExp(Rational s, Rational r) : s_exp(s), r_exp(r) {
  require(r_exp >= Rational(0) && s_exp >= r_exp, "bad_interval", "interval needs s_exp >= r_exp >= 0");
}

RobbaElem::RobbaElem(RingPtr ctx, Digits digits, int wprec) : ctx_(std::move(ctx)), wprec_(wprec) {
  const auto& default_prec = ctx_->field()->config().default_tprec;
  for (auto& [i, d] : digits) {
    if (i >= wprec_) break;
    check_same_field(d, CoeffElem::zero(ctx_->field()));
    if (d.is_zero() && d.tprec() >= default_prec) continue;
    digits_.emplace(i, std::move(d));
  }
}

RobbaElem RobbaElem::zero(const RingPtr& ctx) { return RobbaElem(ctx, {}, ctx->wprec()); }

RobbaElem RobbaElem::one(const RingPtr& ctx) { return teichmuller(ctx, CoeffElem::constant(ctx->field(), 1)); }

RobbaElem RobbaElem::varpi_power(const RingPtr& ctx, int k) {
  return RobbaElem(ctx, {{k, CoeffElem::constant(ctx->field(), 1)}}, ctx->wprec());
}

RobbaElem RobbaElem::teichmuller(const RingPtr& ctx, const CoeffElem& c) {
  return RobbaElem(ctx, {{0, c}}, ctx->wprec());
}

CoeffElem RobbaElem::digit(int i) const {
  if (i >= wprec_) throw_indeterminate("digit " + std::to_string(i) + " is beyond the known precision");
  auto it = digits_.find(i);
  return it == digits_.end() ? CoeffElem::zero(ctx_->field()) : it->second;
}

int RobbaElem::i_min() const noexcept { return digits_.empty() ? wprec_ : digits_.begin()->first; }

Rational RobbaElem::t_shift() const {
  Rational m(0);
  for (const auto& [i, d] : digits_) {
    if (!d.is_zero()) m = std::max(m, -d.valuation());
  }
  return m;
}

RobbaKind RobbaElem::kind() const {
  return (i_min() >= 0 && t_shift() == 0) ? RobbaKind::A : RobbaKind::B;
}

std::string RobbaElem::to_string() const {
  std::string out;
  for (const auto& [i, d] : digits_) {
    if (!out.empty()) out += " + ";
    if (i == 1) out += "w*";
    if (i != 0 && i != 1) out += "w^" + std::to_string(i) + "*";
    out += "[" + d.to_string() + "]";
  }
  if (wprec_ < ctx_->wprec()) {
    if (!out.empty()) out += " + ";
    out += "O(w^" + std::to_string(wprec_) + ")";
  }
  return out.empty() ? "0" : out;
}

RobbaElem robba_from_witt(const WittElem& x) {
  RobbaElem::Digits digits;
  for (int i = 0; i < x.levels(); ++i) digits.emplace(i, x.digit(i));
  return RobbaElem(x.ctx(), std::move(digits), x.levels());
}

WittElem robba_to_witt(const RobbaElem& x) {
  require(x.kind() == RobbaKind::A, "not_integral", "element is not in W(O_L)");
  const int levels = std::min(x.wprec(), x.ctx()->wprec());
  std::vector<CoeffElem> digits;
  for (int i = 0; i < levels; ++i) digits.push_back(x.digit(i));
  return WittElem(x.ctx(), std::move(digits));
}

RobbaNormalForm robba_normalize(const RobbaElem& x, int k, const Rational& m) {
  require(k >= -x.i_min() && k >= 0 && m >= x.t_shift(), "bad_argument", "normalization too small for element");
  const auto& ctx = x.ctx();
  const int levels = std::max(0, std::min(x.wprec() + k, ctx->wprec()));
  std::vector<CoeffElem> digits;
  for (int j = 0; j < levels; ++j) digits.push_back(x.digit(j - k).shifted(m));
  return {k, m, WittElem(ctx, std::move(digits))};
}

RobbaNormalForm robba_normalize(const RobbaElem& x) {
  return robba_normalize(x, std::max(0, -x.i_min()), x.t_shift());
}

RobbaElem robba_denormalize(const WittElem& core, int k, const Rational& m) {
  RobbaElem::Digits digits;
  for (int j = 0; j < core.levels(); ++j) digits.emplace(j - k, core.digit(j).shifted(-m));
  return RobbaElem(core.ctx(), std::move(digits), core.levels() - k);
}

namespace {

void check_same_ring(const RobbaElem& x, const RobbaElem& y) {
  if (x.ctx() != y.ctx() && !(*x.ctx() == *y.ctx())) {
    throw_precondition("config_mismatch", "Robba elements come from different rings");
  }
}

}  // namespace

RobbaElem robba_add(const RobbaElem& x, const RobbaElem& y) {
  check_same_ring(x, y);
  if (x.ctx()->equal_char()) {
    const int wprec = std::min(x.wprec(), y.wprec());
    auto digits = x.digits();
    for (const auto& [i, d] : y.digits()) {
      auto [it, inserted] = digits.emplace(i, d);
      if (!inserted) it->second = coeff_add(it->second, d);
    }
    return RobbaElem(x.ctx(), std::move(digits), wprec);
  }
  const auto nx = robba_normalize(x);
  const auto ny = robba_normalize(y);
  const int k = std::max(nx.k, ny.k);
  const Rational m = std::max(nx.m, ny.m);
  return robba_denormalize(witt_add(robba_normalize(x, k, m).core, robba_normalize(y, k, m).core), k, m);
}

RobbaElem robba_neg(const RobbaElem& x) {
  if (x.ctx()->equal_char()) {
    RobbaElem::Digits digits;
    for (const auto& [i, d] : x.digits()) digits.emplace(i, coeff_neg(d));
    return RobbaElem(x.ctx(), std::move(digits), x.wprec());
  }
  const auto n = robba_normalize(x);
  return robba_denormalize(witt_neg(n.core), n.k, n.m);
}

RobbaElem robba_sub(const RobbaElem& x, const RobbaElem& y) { return robba_add(x, robba_neg(y)); }

RobbaElem robba_mul(const RobbaElem& x, const RobbaElem& y) {
  check_same_ring(x, y);
  if (x.ctx()->equal_char()) {
    const int wprec = std::min(x.wprec() + y.i_min(), y.wprec() + x.i_min());
    RobbaElem::Digits digits;
    for (const auto& [i, a] : x.digits()) {
      for (const auto& [j, b] : y.digits()) {
        if (i + j >= wprec) break;
        auto [it, inserted] = digits.emplace(i + j, coeff_mul(a, b));
        if (!inserted) it->second = coeff_add(it->second, coeff_mul(a, b));
      }
    }
    return RobbaElem(x.ctx(), std::move(digits), wprec);
  }
  const auto nx = robba_normalize(x);
  const auto ny = robba_normalize(y);
  return robba_denormalize(witt_mul(nx.core, ny.core), nx.k + ny.k, nx.m + ny.m);
}

RobbaElem robba_pow(const RobbaElem& x, unsigned n) {
  RobbaElem result = RobbaElem::one(x.ctx());
  RobbaElem base = x;
  while (n > 0) {
    if (n & 1u) result = robba_mul(result, base);
    n >>= 1u;
    if (n > 0) base = robba_mul(base, base);
  }
  return result;
}

NormExp h0r_norm(const RobbaElem& x, const Rational& rho) {
  const Rational weight = rho + 1;
  if (weight < Rational(0)) {
    throw_precondition("divergent", "H(0,r) diverges for r > p (rho = " + to_string(rho) + ")");
  }
  std::optional<Rational> exact;
  const auto& t_exp = x.ctx()->field()->config().t_exponent;
  Rational bound = Rational(x.wprec()) * weight - x.t_shift() * t_exp;
  for (const auto& [i, d] : x.digits()) {
    const auto n = coeff_norm(d).shifted(Rational(i) * weight);
    if (n.is_exact()) {
      exact = exact ? std::min(*exact, n.value()) : n.value();
    } else {
      bound = std::min(bound, n.value());
    }
  }
  if (exact && *exact <= bound) return NormExp::exact(*exact);
  return NormExp::below(bound);
}

NormExp lambdaI_norm(const RobbaElem& x, const IntervalExp& interval) {
  return norm_max(h0r_norm(x, interval.s_exp), h0r_norm(x, interval.r_exp));
}

}  // namespace robba
