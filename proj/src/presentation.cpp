#include "robba/presentation.hpp"

#include "robba/error.hpp"

#include <algorithm>
#include <optional>

namespace robba {

namespace {

constexpr int kMaxReducePasses = 64;

// W(sum_{i<=j} [u^i x̄_i]) + sum_{i>j} ϖ^i [x̄_i], which is ≡ x mod π.
WittElem substitute(const WittElem& x, const CoeffElem& u, int j) {
  const auto& ctx = x.ctx();
  const auto& field = ctx->field();
  const int levels = x.levels();
  std::vector<CoeffElem> tail(x.digits());
  for (int i = 0; i <= j && i < levels; ++i) tail[static_cast<std::size_t>(i)] = CoeffElem::zero(field);
  if (ctx->equal_char()) {
    CoeffElem head = CoeffElem::zero(field);
    for (int i = 0; i <= j && i < levels; ++i) head = coeff_add(head, coeff_mul(coeff_pow(u, i), x.digit(i)));
    tail[0] = head;
    return WittElem(ctx, std::move(tail));
  }
  WittElem sum = WittElem(ctx, std::move(tail));
  for (int i = 0; i <= j && i < levels; ++i) {
    sum = witt_add(sum, WittElem::teichmuller(ctx, coeff_mul(coeff_pow(u, i), x.digit(i))).truncated(levels));
  }
  return sum;
}

bool decidably_stable(const WittElem& y) {
  try {
    return is_stable(y);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::Indeterminate) throw;
    return false;
  }
}

}  // namespace

std::optional<NormExp> digit_lambda(const WittElem& x) {
  std::optional<Rational> exact, bound;
  for (int i = 0; i < x.levels(); ++i) {
    const auto n = coeff_norm(x.digit(i)).shifted(Rational(i));
    auto& slot = n.is_exact() ? exact : bound;
    slot = slot ? std::min(*slot, n.value()) : n.value();
  }
  if (exact && (!bound || *exact <= *bound)) return NormExp::exact(*exact);
  if (bound) return NormExp::below(*bound);
  return std::nullopt;
}

StableReduction stable_reduce(const WittElem& x, const CoeffElem& u, ReduceStrategy strategy) {
  require_admissible_center(u);
  check_same_field(u, CoeffElem::zero(x.ctx()->field()));
  const int levels = x.levels();
  std::optional<WittElem> y;
  if (levels == 0) y = x;
  WittElem current = x;
  for (int pass = 0; pass < kMaxReducePasses && !y; ++pass) {
    if (strategy == ReduceStrategy::FirstStable) {
      for (int j = 0; j < levels - 1 && !y; ++j) {
        auto candidate = substitute(current, u, j);
        if (decidably_stable(candidate)) y = std::move(candidate);
      }
      if (y) break;
    }
    auto full = substitute(current, u, levels - 1);
    if (decidably_stable(full)) {
      y = std::move(full);
      break;
    }
    // Mixed characteristic: carries put mass back into higher digits, so the
    // full substitution is repeated until it settles.
    current = std::move(full);
  }
  if (!y) throw_indeterminate("no decidably stable representative mod (varpi - [u]) at this precision");
  WittElem q = div_by_linear(witt_sub(x, *y), u);
  return {std::move(*y), std::move(q)};
}

StablePresentation stable_presentation(const WittElem& x, const CoeffElem& u, int depth, ReduceStrategy strategy) {
  if (depth < 0) depth = x.levels();
  StablePresentation pres{u, {}, x, x.levels(), {digit_lambda(x)}};
  for (int i = 0; i < depth; ++i) {
    if (pres.residual.levels() == 0) {
      throw_precondition("precision_exhausted", "stable presentation exhausted the varpi-precision at depth " +
                                                    std::to_string(i) + " of " + std::to_string(depth));
    }
    auto step = stable_reduce(pres.residual, u, strategy);
    pres.entries.push_back(std::move(step.y));
    pres.residual = std::move(step.q);
    pres.residual_norms.push_back(digit_lambda(pres.residual));
  }
  return pres;
}

WittElem reassemble(const StablePresentation& pres) {
  const auto& ctx = pres.residual.ctx();
  const WittElem pi = WittElem::varpi_power(ctx, 1) - WittElem::teichmuller(ctx, pres.center);
  WittElem total = pres.residual.levels() > 0 ? pres.residual : WittElem::zero(ctx);
  for (int i = pres.depth() - 1; i >= 0; --i) total = witt_add(witt_mul(total, pi), pres.entries[i]);
  return total;
}

namespace {

// Exponent of H(u, r)(ϖ) = max(r/p, |u|); unset when it is 0 (u = 0, r = 0).
std::optional<Rational> varpi_exponent(const CoeffElem& u, const Radius& r) {
  std::optional<Rational> e;
  if (!u.is_zero()) e = u.ctx()->config().t_exponent * u.valuation();
  if (!r.is_zero()) e = e ? std::min(*e, r.rho() + 1) : r.rho() + 1;
  return e;
}

// The unknown part of x is a multiple of ϖ^L.
NormExp apply_floor(NormExp n, const StablePresentation& pres, const Radius& r) {
  const auto w = varpi_exponent(pres.center, r);
  if (!w) return n;
  const Rational floor = Rational(pres.source_levels) * *w;
  if (n.value() < floor) return n;
  return NormExp::below(floor);
}

}  // namespace

NormExp eval_H(const StablePresentation& pres, const Radius& r) {
  if (pres.entries.empty()) return NormExp::below(Rational(0));
  if (r.is_zero()) return apply_floor(*digit_lambda(pres.entries[0]), pres, r);
  const Rational weight = r.rho() + 1;
  const auto w = varpi_exponent(pres.center, r);
  std::optional<Rational> weakest;
  // Truncating after D terms leaves the tail H(π^D residual_D) <= (r/p)^D λ(residual_D).
  for (int depth = pres.depth(); depth >= 1; --depth) {
    std::optional<Rational> exact;
    // Unknown levels enter a max, so a tie with them is harmless;
    // the ϖ^L part is added to x and a tie with it could cancel.
    std::optional<Rational> bound;
    bool tie_ok = true;
    auto lower = [&](const Rational& b, bool ok) {
      if (!bound || b < *bound) {
        bound = b;
        tie_ok = ok;
      } else if (b == *bound) {
        tie_ok = tie_ok && ok;
      }
    };
    if (const auto& rn = pres.residual_norms[static_cast<std::size_t>(depth)]) {
      lower(Rational(depth) * weight + rn->value(), true);
    }
    if (w) lower(Rational(pres.source_levels) * *w, false);
    for (int i = 0; i < depth; ++i) {
      const auto n = digit_lambda(pres.entries[i])->shifted(Rational(i) * weight);
      if (n.is_exact()) {
        exact = exact ? std::min(*exact, n.value()) : n.value();
      } else {
        lower(n.value(), true);
      }
    }
    if (exact && (!bound || *exact < *bound || (*exact == *bound && tie_ok))) return NormExp::exact(*exact);
    if (!bound) throw_internal("presentation with neither values nor bounds");
    const Rational b = exact ? std::min(*exact, *bound) : *bound;
    weakest = weakest ? std::max(*weakest, b) : b;
  }
  return NormExp::below(*weakest);
}

NormExp eval_H(const CoeffElem& u, const Radius& r, const WittElem& x) {
  if (!r.is_zero()) require(r.rho() >= Rational(0), "bad_radius", "H(u,r) needs r <= 1 (rho >= 0)");
  if (r.is_zero()) return eval_H(stable_presentation(x, u, std::min(1, x.levels())), r);
  return eval_H(stable_presentation(x, u), r);
}

namespace {

// Exponent of H(u, r)(ϖ), which must be nonzero to divide by it.
NormExp varpi_norm(const CoeffElem& u, const Radius& r, const RingPtr& ctx) {
  const auto n = eval_H(u, r, WittElem::varpi_power(ctx, 1));
  if (n.is_below()) throw_precondition("zero_seminorm", "H(u,r)(varpi) vanishes; Laurent elements are undefined here");
  return n;
}

}  // namespace

NormExp eval_H(const CoeffElem& u, const Radius& r, const RobbaElem& x) {
  const auto normal = robba_normalize(x);
  auto core = eval_H(u, r, normal.core);
  const auto& t_exp = x.ctx()->field()->config().t_exponent;
  Rational shift = -normal.m * t_exp;
  if (normal.k > 0) shift -= Rational(normal.k) * varpi_norm(u, r, x.ctx()).value();
  return core.shifted(shift);
}

std::string to_string(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

Sign parse_sign(const std::string& text) {
  if (text == "+") return Sign::Plus;
  if (text == "-") return Sign::Minus;
  throw Error(ErrorCategory::Parse, "bad_sign", "sign must be '+' or '-', got '" + text + "'");
}

Beta5Value eval_beta5(const CoeffElem& u, const Rational& rho, Sign sign, const WittElem& x) {
  require(rho > Rational(0), "bad_radius", "type-5 points need rho > 0");
  if (!in_value_group(rho, *x.ctx()->field())) {
    const auto h = eval_H(u, Radius::exp(rho), x);
    Beta5Value out;
    out.coincides_with_rank1 = true;
    if (h.is_below()) {
      out.value = GammaValue::zero();
      out.below = true;
      out.bound = h.value();
    } else {
      out.value = GammaValue::of(h.value());
    }
    return out;
  }
  const auto pres = stable_presentation(x, u);
  const Rational weight = rho + 1;
  const std::int64_t dir = sign == Sign::Plus ? 1 : -1;
  // Some unknown contribution to x has value at most (e, k); open_k means k
  // is unbounded above. Each contribution has its own k, so the maximum is
  // decided once it beats every bound.
  struct Bound {
    Rational e;
    std::int64_t k;
    bool open_k;
  };
  // β(ϖ) = max(β(π), |u|) and the unknown part of x is a multiple of ϖ^L.
  Rational floor_e = weight;
  std::int64_t floor_k = dir;
  if (!u.is_zero()) {
    const Rational eu = x.ctx()->field()->config().t_exponent * u.valuation();
    if (eu < weight) floor_k = 0;
    if (eu == weight) floor_k = std::max<std::int64_t>(dir, 0);
    floor_e = std::min(eu, weight);
  }
  const Rational L(pres.source_levels);
  const Bound floor{L * floor_e, pres.source_levels * floor_k, false};
  std::optional<Rational> weakest;
  bool any_exact = false;
  for (int depth = pres.depth(); depth >= 1; --depth) {
    std::vector<Bound> bounds;
    bounds.push_back(floor);
    std::optional<GammaValue> best;
    int best_level = -1;
    int ties = 0;
    for (int i = 0; i < depth; ++i) {
      const auto n = digit_lambda(pres.entries[i])->shifted(Rational(i) * weight);
      if (n.is_below()) {
        bounds.push_back({n.value(), dir * i, false});
        continue;
      }
      const auto value = GammaValue::of(n.value(), dir * i);
      if (!best || value > *best) {
        best = value;
        best_level = i;
        ties = 0;
      } else if (value == *best) {
        ++ties;
      }
    }
    if (ties > 0) throw_internal("type-5 maximum attained at more than one level");
    if (const auto& rn = pres.residual_norms[static_cast<std::size_t>(depth)]) {
      bounds.push_back({Rational(depth) * weight + rn->value(), dir * depth, sign == Sign::Plus});
    }
    if (!best) {
      Rational b = bounds.front().e;
      for (const auto& bd : bounds) b = std::min(b, bd.e);
      weakest = weakest ? std::max(*weakest, b) : b;
      continue;
    }
    any_exact = true;
    const bool decided = std::all_of(bounds.begin(), bounds.end(), [&](const Bound& bd) {
      if (best->e() < bd.e) return true;
      if (best->e() > bd.e) return false;
      return !bd.open_k && best->k() > bd.k;
    });
    if (!decided) continue;
    Beta5Value out;
    out.value = *best;
    out.level = best_level;
    return out;
  }
  if (any_exact) throw_indeterminate("type-5 value undecidable: a level below precision competes with the maximum");
  Beta5Value out;
  out.below = true;
  out.bound = weakest.value_or(Rational(0));
  return out;
}

Beta5Value eval_beta5(const CoeffElem& u, const Rational& rho, Sign sign, const RobbaElem& x) {
  const auto normal = robba_normalize(x);
  auto out = eval_beta5(u, rho, sign, normal.core);
  const auto& t_exp = x.ctx()->field()->config().t_exponent;
  GammaValue unit = GammaValue::of(-normal.m * t_exp);
  if (normal.k > 0) {
    const auto w = eval_beta5(u, rho, sign, WittElem::varpi_power(x.ctx(), 1));
    if (w.below) throw_precondition("zero_seminorm", "β(varpi) vanishes; Laurent elements are undefined here");
    unit = unit / w.value.pow(normal.k);
  }
  if (out.below) {
    out.bound += unit.e();
  } else {
    out.value = out.value * unit;
  }
  if (normal.k != 0 || normal.m != 0) out.level = -1;
  return out;
}

}  // namespace robba
