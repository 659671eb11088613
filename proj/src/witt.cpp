#include "robba/witt.hpp"

#include "robba/error.hpp"

#include <algorithm>

namespace robba {

std::string to_string(EMode mode) { return mode == EMode::EqualChar ? "equal" : "mixed"; }

EMode parse_emode(const std::string& text) {
  if (text == "equal" || text == "EqualChar") return EMode::EqualChar;
  if (text == "mixed" || text == "MixedCharPTypical") return EMode::MixedCharPTypical;
  throw_precondition("bad_config", "unknown backend '" + text + "' (expected equal or mixed)");
}

std::shared_ptr<const RingContext> RingContext::create(RingConfig config) {
  auto field = FieldContext::create(config.field);
  config.field = field->config();
  require(config.wprec >= 1, "bad_config", "wprec must be positive");
  std::shared_ptr<const WittPolyTable> table;
  if (config.e_mode == EMode::MixedCharPTypical) {
    require(config.field.q == config.field.p, "bad_config", "mixed-characteristic backend requires q = p");
    table = WittPolyTable::get(config.field.p, config.wprec);
  }
  return std::shared_ptr<const RingContext>(new RingContext(std::move(config), std::move(field), std::move(table)));
}

const WittPolyTable& RingContext::table() const {
  if (!table_) throw_internal("Witt polynomial table requested for the equal-characteristic backend");
  return *table_;
}

// ---------------------------------------------------------------- elements

WittElem::WittElem(RingPtr ctx, std::vector<CoeffElem> digits) : ctx_(std::move(ctx)), digits_(std::move(digits)) {
  if (static_cast<int>(digits_.size()) > ctx_->wprec()) digits_.erase(digits_.begin() + ctx_->wprec(), digits_.end());
  for (const auto& d : digits_) {
    check_same_field(d, CoeffElem::zero(ctx_->field()));
    if (!d.is_integral()) {
      throw_precondition("not_integral", "Witt digit " + d.to_string() + " is not in O_L");
    }
  }
}

WittElem WittElem::zero(const RingPtr& ctx) {
  return WittElem(ctx, std::vector<CoeffElem>(static_cast<std::size_t>(ctx->wprec()), CoeffElem::zero(ctx->field())));
}

WittElem WittElem::one(const RingPtr& ctx) { return teichmuller(ctx, CoeffElem::constant(ctx->field(), 1)); }

WittElem WittElem::teichmuller(const RingPtr& ctx, const CoeffElem& x) {
  auto digits = std::vector<CoeffElem>(static_cast<std::size_t>(ctx->wprec()), CoeffElem::zero(ctx->field()));
  digits[0] = x;
  return WittElem(ctx, std::move(digits));
}

WittElem WittElem::varpi_power(const RingPtr& ctx, int k) {
  require(k >= 0, "bad_argument", "negative power of varpi in the Witt ring");
  return witt_shift(one(ctx), k);
}

WittElem WittElem::from_int(const RingPtr& ctx, std::int64_t n) {
  if (ctx->equal_char()) return teichmuller(ctx, CoeffElem::constant(ctx->field(), ctx->field()->fq().from_int(n)));
  WittElem result = zero(ctx);
  WittElem base = one(ctx);
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  while (k > 0) {
    if (k & 1u) result = witt_add(result, base);
    k >>= 1u;
    if (k > 0) base = witt_add(base, base);
  }
  return n < 0 ? witt_neg(result) : result;
}

WittElem WittElem::truncated(int levels) const {
  if (levels >= this->levels()) return *this;
  return WittElem(ctx_, std::vector<CoeffElem>(digits_.begin(), digits_.begin() + std::max(0, levels)));
}

std::string WittElem::to_string() const {
  const auto& default_prec = ctx_->field()->config().default_tprec;
  std::string out;
  for (int i = 0; i < levels(); ++i) {
    const auto& d = digits_[static_cast<std::size_t>(i)];
    if (d.is_zero() && d.tprec() >= default_prec) continue;
    if (!out.empty()) out += " + ";
    if (i == 1) out += "w*";
    if (i > 1) out += "w^" + std::to_string(i) + "*";
    out += "[" + d.to_string() + "]";
  }
  if (levels() < ctx_->wprec()) {
    if (!out.empty()) out += " + ";
    out += "O(w^" + std::to_string(levels()) + ")";
  }
  return out.empty() ? "0" : out;
}

void check_same_ring(const WittElem& x, const WittElem& y) {
  if (x.ctx() != y.ctx() && !(*x.ctx() == *y.ctx())) {
    throw_precondition("config_mismatch", "Witt elements come from different rings");
  }
}

// ---------------------------------------------------------------- mixed backend

namespace {

// Evaluates a universal polynomial in char p on Witt coordinates. Powers are
// split along base-p digits of the exponent so each factor is a Frobenius.
CoeffElem evaluate_mod_p(const WittPolyTable::Poly& poly, const std::vector<CoeffElem>& a,
                         const std::vector<CoeffElem>& b, const FieldPtr& field) {
  const int p = field->p();
  const int half = WittPolyTable::kMaxLevels;
  std::vector<std::vector<CoeffElem>> frob(2 * half);
  auto var = [&](int v) -> const CoeffElem& { return v < half ? a[v] : b[v - half]; };
  auto frob_power = [&](int v, int j) -> const CoeffElem& {
    auto& cache = frob[v];
    while (static_cast<int>(cache.size()) <= j) {
      cache.push_back(cache.empty() ? var(v) : coeff_frobenius(cache.back(), 1));
    }
    return cache[j];
  };
  std::optional<CoeffElem> total;
  for (const auto& [mono, coeff] : poly) {
    CoeffElem term = CoeffElem::constant(field, field->fq().from_int(coeff));
    for (int v = 0; v < 2 * half; ++v) {
      int e = mono[v];
      for (int j = 0; e > 0; ++j, e /= p) {
        for (int r = 0; r < e % p; ++r) term = coeff_mul(term, frob_power(v, j));
      }
    }
    total = total ? coeff_add(*total, term) : term;
  }
  if (!total) return CoeffElem::zero(field);
  return *total;
}

template <class Select>
WittElem mixed_op(const WittElem& x, const WittElem& y, Select select) {
  const auto& ctx = x.ctx();
  const auto& field = ctx->field();
  const int levels = std::min(x.levels(), y.levels());
  std::vector<CoeffElem> a, b;
  for (int i = 0; i < levels; ++i) {
    a.push_back(coeff_frobenius(x.digit(i), i));
    b.push_back(coeff_frobenius(y.digit(i), i));
  }
  const auto& table = ctx->table();
  std::vector<CoeffElem> digits;
  for (int n = 0; n < levels; ++n) {
    digits.push_back(coeff_root_p_power(evaluate_mod_p(select(table, n), a, b, field), n));
  }
  return WittElem(ctx, std::move(digits));
}

}  // namespace

// ---------------------------------------------------------------- arithmetic

WittElem witt_add(const WittElem& x, const WittElem& y) {
  check_same_ring(x, y);
  if (!x.ctx()->equal_char()) {
    return mixed_op(x, y, [](const WittPolyTable& t, int n) -> const WittPolyTable::Poly& { return t.sum(n); });
  }
  const int levels = std::min(x.levels(), y.levels());
  std::vector<CoeffElem> digits;
  for (int i = 0; i < levels; ++i) digits.push_back(coeff_add(x.digit(i), y.digit(i)));
  return WittElem(x.ctx(), std::move(digits));
}

WittElem witt_neg(const WittElem& x) {
  const auto& ctx = x.ctx();
  if (ctx->equal_char()) {
    std::vector<CoeffElem> digits;
    for (const auto& d : x.digits()) digits.push_back(coeff_neg(d));
    return WittElem(ctx, std::move(digits));
  }
  if (ctx->p() != 2) return teich_scale(CoeffElem::constant(ctx->field(), ctx->field()->fq().from_int(-1)), x);
  // -1 = sum_i 2^i [1] in W(F_2).
  std::vector<CoeffElem> ones(static_cast<std::size_t>(ctx->wprec()), CoeffElem::constant(ctx->field(), 1));
  return witt_mul(WittElem(ctx, std::move(ones)), x);
}

WittElem witt_sub(const WittElem& x, const WittElem& y) { return witt_add(x, witt_neg(y)); }

WittElem witt_mul(const WittElem& x, const WittElem& y) {
  check_same_ring(x, y);
  if (!x.ctx()->equal_char()) {
    return mixed_op(x, y, [](const WittPolyTable& t, int n) -> const WittPolyTable::Poly& { return t.product(n); });
  }
  const int levels = std::min(x.levels(), y.levels());
  std::vector<CoeffElem> digits;
  for (int n = 0; n < levels; ++n) {
    CoeffElem acc = coeff_mul(x.digit(0), y.digit(n));
    for (int i = 1; i <= n; ++i) acc = coeff_add(acc, coeff_mul(x.digit(i), y.digit(n - i)));
    digits.push_back(acc);
  }
  return WittElem(x.ctx(), std::move(digits));
}

WittElem witt_pow(const WittElem& x, unsigned n) {
  WittElem result = WittElem::one(x.ctx());
  WittElem base = x;
  while (n > 0) {
    if (n & 1u) result = witt_mul(result, base);
    n >>= 1u;
    if (n > 0) base = witt_mul(base, base);
  }
  return result;
}

WittElem witt_shift(const WittElem& x, int k) {
  require(k >= 0, "bad_argument", "negative shift");
  std::vector<CoeffElem> digits(static_cast<std::size_t>(k), CoeffElem::zero(x.ctx()->field()));
  digits.insert(digits.end(), x.digits().begin(), x.digits().end());
  return WittElem(x.ctx(), std::move(digits));
}

WittElem witt_shift_down(const WittElem& x) {
  if (x.levels() == 0) return x;
  if (!x.digit(0).is_zero()) {
    throw_precondition("not_divisible", "digit 0 is nonzero, element is not divisible by varpi");
  }
  return WittElem(x.ctx(), std::vector<CoeffElem>(x.digits().begin() + 1, x.digits().end()));
}

WittElem teich_scale(const CoeffElem& c, const WittElem& x) {
  std::vector<CoeffElem> digits;
  for (const auto& d : x.digits()) digits.push_back(coeff_mul(c, d));
  return WittElem(x.ctx(), std::move(digits));
}

// ---------------------------------------------------------------- norms

NormExp lambda_norm(const WittElem& x) {
  std::optional<Rational> exact;
  Rational bound(x.levels());
  for (int i = 0; i < x.levels(); ++i) {
    const auto n = coeff_norm(x.digit(i)).shifted(Rational(i));
    if (n.is_exact()) {
      exact = exact ? std::min(*exact, n.value()) : n.value();
    } else {
      bound = std::min(bound, n.value());
    }
  }
  if (exact && *exact <= bound) return NormExp::exact(*exact);
  return NormExp::below(bound);
}

bool is_stable(const WittElem& x) {
  if (x.levels() == 0) return true;
  const auto lead = coeff_norm(x.digit(0));
  bool all_zero = lead.is_below();
  for (int i = 1; i < x.levels(); ++i) {
    const auto n = coeff_norm(x.digit(i)).shifted(Rational(i));
    if (n.is_exact()) all_zero = false;
    if (lead.is_below()) continue;
    // Need |x̄_0| > p^{-i}|x̄_i|, i.e. e_0 < i + e_i.
    if (lead.value() < n.value()) continue;
    if (n.is_exact()) return false;
    throw_indeterminate("stability undecidable at level " + std::to_string(i));
  }
  if (lead.is_below()) {
    if (all_zero) return true;
    return false;
  }
  return true;
}

WittElem div_by_linear(const WittElem& x, const CoeffElem& u) {
  const auto& ctx = x.ctx();
  if (u.is_zero()) return witt_shift_down(x);
  require(coeff_norm(u).value() >= Rational(1), "bad_argument", "|u| must be at most p^-1");
  std::vector<CoeffElem> q;
  WittElem current = x;
  // Quotient digit k is fixed by digit 0 of the running remainder, so q keeps
  // every level of x; only t-precision is lost to the divisions by u.
  while (current.levels() > 0) {
    const CoeffElem qk = coeff_neg(coeff_div(current.digit(0), u));
    if (!qk.is_integral()) {
      throw_precondition("not_divisible", "element is not divisible by (varpi - [u]): quotient digit " +
                                              std::to_string(q.size()) + " is not integral");
    }
    q.push_back(qk);
    const int levels = current.levels();
    if (levels == 1) break;
    // current - [qk](ϖ - [u]) = current - ϖ[qk] + [qk u]
    const WittElem tq = WittElem::teichmuller(ctx, qk).truncated(levels);
    const WittElem tqu = WittElem::teichmuller(ctx, coeff_mul(qk, u)).truncated(levels);
    const WittElem next = witt_add(witt_sub(current, witt_shift(tq, 1)), tqu);
    if (!next.digit(0).is_zero()) throw_internal("division step left a nonzero constant digit");
    current = WittElem(ctx, std::vector<CoeffElem>(next.digits().begin() + 1, next.digits().end()));
  }
  return WittElem(ctx, std::move(q));
}

}  // namespace robba
