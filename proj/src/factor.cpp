#include "robba/factor.hpp"

#include "robba/error.hpp"

#include <optional>

namespace robba {

namespace {

constexpr int kMaxSteps = 512;

using Poly = std::vector<CoeffElem>;

std::int64_t binomial_mod(int n, int k, int p) {
  std::int64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c % p;
}

// Q(z) = P(a + z), with Q_i capped at (n - i)·v where v is the valuation of
// the whole shift so far: the unknown coefficients beyond the truncation
// contribute from there on.
Poly taylor_shift(const Poly& P, const CoeffElem& a, const Rational& v) {
  const auto& ctx = a.ctx();
  const int n = static_cast<int>(P.size());
  const int p = ctx->p();
  std::vector<CoeffElem> a_pow{CoeffElem::constant(ctx, 1)};
  for (int k = 1; k < n; ++k) a_pow.push_back(coeff_mul(a_pow.back(), a));
  Poly Q;
  for (int i = 0; i < n; ++i) {
    CoeffElem sum = CoeffElem::zero(ctx);
    for (int k = i; k < n; ++k) {
      const auto c = binomial_mod(k, i, p);
      if (c == 0) continue;
      sum = coeff_add(sum, coeff_mul(P[k], a_pow[k - i]).scaled(ctx->fq().from_int(c)));
    }
    Q.push_back(sum.truncated(Rational(n - i) * v));
  }
  return Q;
}

// Roots of φ(c) = Σ coeffs[j] c^j in F^*, with multiplicity.
std::vector<std::pair<FqElem, int>> residual_roots(const FiniteField& fq, std::vector<FqElem> coeffs) {
  std::vector<std::pair<FqElem, int>> out;
  for (FqElem c = 1; c < fq.size(); ++c) {
    int mult = 0;
    while (coeffs.size() > 1) {
      // Synthetic division by (z - c).
      std::vector<FqElem> quot(coeffs.size() - 1);
      FqElem acc = 0;
      for (std::size_t j = coeffs.size(); j-- > 0;) {
        acc = fq.add(fq.mul(acc, c), coeffs[j]);
        if (j > 0) quot[j - 1] = acc;
      }
      if (acc != 0) break;
      coeffs = std::move(quot);
      ++mult;
    }
    if (mult > 0) out.emplace_back(c, mult);
  }
  return out;
}

struct Solver {
  FieldPtr field;
  std::vector<CoeffElem> roots;
  int steps = 0;

  Rational t_exp() const { return field->config().t_exponent; }

  // Finds `count` roots of P near `prefix`: z = prefix + z' with v(z') > lo
  // (>= lo when lo_inclusive) and v(z') < hi when hi is set.
  void solve(const Poly& P, int count, const CoeffElem& prefix, const Rational& lo, bool lo_inclusive,
             std::optional<Rational> hi) {
    if (count == 0) return;
    if (++steps > kMaxSteps) throw_indeterminate("root refinement did not settle within the step budget");
    if (static_cast<int>(P.size()) <= count) throw_indeterminate("ran out of varpi-levels while isolating roots");
    int first = 0;
    while (first <= count && P[first].is_zero()) ++first;
    if (first > count) throw_indeterminate("coefficients vanish at precision; roots are not separated");
    if (first > 0) {
      // `first` roots agree with the prefix to the precision the vanishing
      // coefficients allow.
      std::optional<Rational> R;
      const Rational vj = P[first].valuation();
      for (int i = 0; i < first; ++i) {
        const Rational b = (P[i].tprec() - vj) / Rational(first - i);
        R = R ? std::min(*R, b) : b;
      }
      if (*R < lo || (*R == lo && !lo_inclusive)) {
        throw_indeterminate("root is not separated from its neighbours at precision t^" + to_string(*R));
      }
      for (int i = 0; i < first; ++i) roots.push_back(prefix.truncated(std::min(prefix.tprec(), *R)));
      solve(Poly(P.begin() + first, P.end()), count - first, prefix, lo, lo_inclusive, R);
      return;
    }
    // Lower convex hull of the known points (i, v(P_i)), i <= count.
    std::vector<int> hull;
    for (int i = 0; i <= count; ++i) {
      if (P[i].is_zero()) continue;
      while (hull.size() >= 2) {
        const int a = hull[hull.size() - 2], b = hull.back();
        // Drop b when it lies on or above the segment a-i.
        const Rational lhs = (P[b].valuation() - P[a].valuation()) * Rational(i - a);
        const Rational rhs = (P[i].valuation() - P[a].valuation()) * Rational(b - a);
        if (lhs >= rhs) {
          hull.pop_back();
        } else {
          break;
        }
      }
      hull.push_back(i);
    }
    if (hull.back() != count) throw_indeterminate("leading coefficient of the root cluster vanishes at precision");
    auto hull_value = [&](int i) {
      for (std::size_t h = 1; h < hull.size(); ++h) {
        const int a = hull[h - 1], b = hull[h];
        if (i < a || i > b) continue;
        return P[a].valuation() + (P[b].valuation() - P[a].valuation()) * Rational(i - a, b - a);
      }
      throw_internal("hull lookup out of range");
    };
    for (int i = 0; i <= count; ++i) {
      if (P[i].is_zero() && P[i].tprec() <= hull_value(i)) {
        throw_indeterminate("coefficient " + std::to_string(i) + " is too imprecise to fix the Newton polygon");
      }
    }
    const auto& fq = field->fq();
    for (std::size_t h = 1; h < hull.size(); ++h) {
      const int a = hull[h - 1], b = hull[h];
      const Rational s = (P[a].valuation() - P[b].valuation()) / Rational(b - a);
      if (s < lo || (s == lo && !lo_inclusive) || (hi && s >= *hi)) {
        throw_indeterminate("Newton slope " + to_string(s) + " falls outside the separated range");
      }
      if (!has_p_power_denominator(s, field->p())) {
        throw_precondition("root_outside_field", "Newton slope " + to_string(s) + " (norm exponent " +
                                                     to_string(s * t_exp()) + ") is not in Z[1/p]");
      }
      std::vector<FqElem> phi(static_cast<std::size_t>(b - a + 1), 0);
      for (int k = a; k <= b; ++k) {
        if (P[k].is_zero()) continue;
        if (P[k].valuation() + Rational(k - a) * s == P[a].valuation()) phi[k - a] = P[k].leading_coeff();
      }
      const auto found = residual_roots(fq, phi);
      int total = 0;
      for (const auto& [c, m] : found) total += m;
      if (total != b - a) {
        throw_precondition("root_outside_field", "residual polynomial of slope " + to_string(s) +
                                                     " does not split over the configured field");
      }
      for (const auto& [c, m] : found) {
        const CoeffElem term = CoeffElem::monomial(field, c, s);
        const CoeffElem next = coeff_add(prefix, term);
        solve(taylor_shift(P, term, next.valuation()), m, next, s, false, std::nullopt);
      }
    }
  }
};

}  // namespace

int root_count(const WittElem& x) {
  const auto lambda = lambda_norm(x);
  if (lambda.is_below()) throw_indeterminate("λ(x) is below precision");
  const Rational l = lambda.value();
  const int levels = x.levels();
  if (Rational(levels) <= l) throw_indeterminate("λ(x) could also be attained beyond the known levels");
  int d = -1;
  for (int i = 0; i < levels; ++i) {
    const auto n = coeff_norm(x.digit(i)).shifted(Rational(i));
    if (n.is_exact() && n.value() == l) d = i;
  }
  if (d < 0) throw_internal("λ(x) not attained");
  for (int i = d + 1; i < levels; ++i) {
    const auto n = coeff_norm(x.digit(i)).shifted(Rational(i));
    if (n.is_below() && n.value() <= l) throw_indeterminate("a level below precision may attain λ(x)");
  }
  return d;
}

Factorization factor_linear(const WittElem& x) {
  const auto& ctx = x.ctx();
  if (!ctx->equal_char()) {
    throw_precondition("backend_unsupported", "factor_linear needs the equal characteristic backend");
  }
  const int d = root_count(x);
  if (d == 0) throw_precondition("input_stable", "x is stable and has no linear factors");
  const auto& field = ctx->field();
  Solver solver{field, {}, 0};
  const Rational lo = Rational(1) / field->config().t_exponent;
  Poly P(x.digits().begin(), x.digits().end());
  solver.solve(P, d, CoeffElem::zero(field), lo, true, std::nullopt);
  WittElem y = x;
  for (const auto& u : solver.roots) y = div_by_linear(y, u);
  return {std::move(y), std::move(solver.roots)};
}

WittElem expand_factorization(const Factorization& f) {
  const auto& ctx = f.y.ctx();
  WittElem out = f.y;
  for (const auto& u : f.roots) out = witt_mul(out, WittElem::varpi_power(ctx, 1) - WittElem::teichmuller(ctx, u));
  return out;
}

}  // namespace robba
