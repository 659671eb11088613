// Leading-term reduction in weighted Tate algebras: the descent that shrinks
// |psi(x)| for elements c + varpi*x of an ideal, norm-bounded division, and
// finite witnesses for almost finite generation.
#pragma once

#include "robba/tate.hpp"

#include <optional>
#include <vector>

namespace robba {

// ---------------------------------------------------------------- generators

/// m rescaled so that the leading coefficient a of psi(m) has |a| = 1.
template <CoeffDomain D>
struct PreparedGenerator {
  TatePoly<D> m;
  MonomialIndex lead;
  typename D::Elem a;
  /// Exponent of max_{J > lead} |m_J T^J| / |a T^lead| (at least the
  /// relative precision when no such term is stored).
  Rational eps;
};

template <CoeffDomain D>
PreparedGenerator<D> prepare_generator(const TatePoly<D>& m) {
  const auto& d = m.domain();
  const auto psi = nonconstant_projection(m);
  require(!psi.is_zero(), "unprepared_generator", "generator has no nonconstant part at precision");
  const auto lead = leading_data(psi);
  const auto scale = d.unit_of_norm(-d.norm(lead.coefficient).exponent());
  if (!scale) throw_internal("coefficient norm outside the value group");
  auto scaled = tate_scale(m, *scale);
  const auto top = leading_data(nonconstant_projection(scaled));
  const Rational lead_norm = top.norm;
  require(scaled.gauss_norm().value() >= lead_norm, "unprepared_generator",
          "constant term dominates the nonconstant part of " + m.to_string());
  Rational eps = scaled.prec() - lead_norm;
  for (const auto& [index, c] : scaled.terms()) {
    if (grlex_compare(index, top.index) > 0) eps = std::min(eps, scaled.term_norm(index, c) - lead_norm);
  }
  require(eps > 0, "epsilon_one", "generator " + m.to_string() + " has a later term of full norm");
  return {std::move(scaled), top.index, top.coefficient, eps};
}

/// The generator used against leading index I: grlex-least lead dividing I,
/// then least Euclidean degree of the leading coefficient, then list order.
template <CoeffDomain D>
const PreparedGenerator<D>* dominating_generator(const std::vector<PreparedGenerator<D>>& gens,
                                                 const MonomialIndex& index) {
  const PreparedGenerator<D>* best = nullptr;
  for (const auto& g : gens) {
    if (!componentwise_leq(g.lead, index)) continue;
    if (best == nullptr) {
      best = &g;
      continue;
    }
    const auto c = grlex_compare(g.lead, best->lead);
    if (c < 0 || (c == 0 && g.m.domain().degree(g.a) < best->m.domain().degree(best->a))) best = &g;
  }
  return best;
}

// ---------------------------------------------------------------- descent

template <CoeffDomain D>
struct DescentState {
  using Elem = typename D::Elem;

  std::vector<PreparedGenerator<D>> gens;
  /// max over generators; the descent bound is |psi| -> eps * |psi|.
  Rational eps;
  Elem varpi;
  /// The ideal element c_0 + varpi x_0 the descent started from.
  TatePoly<D> start;
  Elem c;
  TatePoly<D> x;
  /// c + varpi x = c * start + sum_k cofactors[k] * gens[k].m.
  std::vector<TatePoly<D>> cofactors;
  /// Norm exponent a coefficient of psi(x) must beat to count in n.
  Rational threshold;
  BigInt counter;
  int steps = 0;
};

/// n: the integer whose binary digit at grlex_rank(I) is set iff the
/// T^I coefficient of psi(x) has norm exponent < threshold.
template <CoeffDomain D>
BigInt descent_counter(const TatePoly<D>& x, const Rational& threshold) {
  BigInt n = 0;
  for (const auto& [index, c] : x.terms()) {
    if (index.is_zero()) continue;
    if (x.term_norm(index, c) < threshold) bit_set(n, static_cast<unsigned>(grlex_rank(index)));
  }
  return n;
}

/// Fixes the round threshold |psi(x)| * eps, capped at the precision of x.
template <CoeffDomain D>
void start_round(DescentState<D>& s) {
  s.threshold = std::min(nonconstant_projection(s.x).gauss_norm().value() + s.eps, s.x.prec());
  s.counter = descent_counter(s.x, s.threshold);
}

/// Sets up c_0 = 1 with start = 1 + varpi x0, which must lie in the ideal
/// generated by gens.
template <CoeffDomain D>
DescentState<D> make_descent_state(const std::vector<TatePoly<D>>& gens, const typename D::Elem& varpi,
                                   const TatePoly<D>& x0) {
  require(!gens.empty(), "unprepared_generator", "descent needs at least one generator");
  const auto& ring = x0.ring();
  const auto& d = ring->domain();
  require(d.norm(varpi).exponent() > 0, "bad_varpi", "varpi must be topologically nilpotent");
  DescentState<D> s{{}, Rational(0), varpi, TatePoly<D>::zero(ring), d.one(), x0, {}, Rational(0), 0, 0};
  for (const auto& g : gens) s.gens.push_back(prepare_generator(g));
  s.eps = s.gens.front().eps;
  for (const auto& g : s.gens) s.eps = std::min(s.eps, g.eps);
  s.start = tate_add(TatePoly<D>::constant(ring, d.one()), tate_scale(x0, varpi));
  for (std::size_t k = 0; k < s.gens.size(); ++k) s.cofactors.push_back(TatePoly<D>::zero(ring, x0.prec()));
  start_round(s);
  return s;
}

/// c + varpi x - (c * start + sum cofactor_k m_k); zero at precision while
/// the descent preserves ideal membership.
template <CoeffDomain D>
TatePoly<D> membership_residual(const DescentState<D>& s) {
  const auto& ring = s.x.ring();
  auto lhs = tate_add(TatePoly<D>::constant(ring, s.c), tate_scale(s.x, s.varpi));
  auto rhs = tate_scale(s.start, s.c);
  for (std::size_t k = 0; k < s.gens.size(); ++k) rhs = tate_add(rhs, tate_mul(s.cofactors[k], s.gens[k].m));
  return tate_sub(lhs, rhs);
}

/// One step: clears the leading T^I coefficient of psi(x) with a generator
/// whose lead J divides I, x -> a x - x_I T^{I-J} m, c -> a c.
template <CoeffDomain D>
DescentState<D> reduction_step(const DescentState<D>& state) {
  require(state.counter > 0, "counter_zero", "reduction step needs a positive counter");
  const auto& d = state.x.domain();
  const auto psi = nonconstant_projection(state.x);
  const auto lead = leading_data(psi);
  // lambda with |lambda varpi psi(x)| = 1.
  const Rational target = -(d.norm(state.varpi).exponent() + lead.norm);
  if (!d.unit_of_norm(target)) {
    throw_precondition("value_group", "no unit of norm p^-" + robba::to_string(target) +
                                          " to rescale the descent; weights leave the value group");
  }
  const auto* g = dominating_generator(state.gens, lead.index);
  if (g == nullptr) {
    throw_precondition("no_dominating_generator",
                       "no generator lead divides " + lead.index.to_string() + "; generators are not prepared");
  }
  const auto shift = lead.index - g->lead;
  DescentState<D> next = state;
  next.x = tate_sub(tate_scale(state.x, g->a), tate_mul_term(g->m, lead.coefficient, shift));
  next.c = d.mul(g->a, state.c);
  const auto k = static_cast<std::size_t>(g - state.gens.data());
  for (std::size_t j = 0; j < next.cofactors.size(); ++j) next.cofactors[j] = tate_scale(state.cofactors[j], g->a);
  const auto delta = TatePoly<D>::monomial(state.x.ring(), d.mul(state.varpi, lead.coefficient), shift);
  next.cofactors[k] = tate_sub(next.cofactors[k], delta.truncated(state.x.prec() + d.norm(state.varpi).exponent()));
  next.counter = descent_counter(next.x, state.threshold);
  ++next.steps;
  if (next.counter >= state.counter) {
    throw_internal("descent counter did not decrease at index " + lead.index.to_string());
  }
  return next;
}

template <CoeffDomain D>
struct DescentResult {
  typename D::Elem c;
  TatePoly<D> x;
  /// |psi(x)| norm exponents at the start of each round and at the end.
  std::vector<NormExp> psi_norms;
  int steps = 0;
  DescentState<D> state;
};

/// Rounds of reduction steps, each shrinking |psi(x)| by eps, until
/// |psi(x)| <= p^{-target} |psi(x0)| or psi(x) vanishes at precision (the
/// last entry of psi_norms is then BelowPrecision).
template <CoeffDomain D>
DescentResult<D> munshi_descent(DescentState<D> state, const Rational& target, int step_budget = 100000) {
  require(state.eps > 0, "epsilon_one", "descent needs eps < 1");
  const auto initial = nonconstant_projection(state.x).gauss_norm();
  std::vector<NormExp> norms{initial};
  if (initial.is_below()) return {state.c, state.x, norms, state.steps, state};
  const auto rounds = robba::ceil(target / state.eps);
  for (std::int64_t r = 0; r < rounds; ++r) {
    if (r > 0) start_round(state);
    const Rational round_start = nonconstant_projection(state.x).gauss_norm().value();
    while (state.counter > 0) {
      if (state.steps >= step_budget) throw_precondition("budget_exceeded", "descent step budget exhausted");
      state = reduction_step(state);
    }
    const auto now = nonconstant_projection(state.x).gauss_norm();
    norms.push_back(now);
    if (now.is_below()) break;
    if (now.value() < round_start + state.eps) throw_internal("descent round missed its bound at " + now.to_string());
  }
  return {state.c, state.x, norms, state.steps, state};
}

// ---------------------------------------------------------------- division

template <CoeffDomain D>
struct Division {
  std::vector<TatePoly<D>> quotients;
  TatePoly<D> remainder;
  int steps = 0;
};

enum class DivisionRule {
  /// Any generator whose lead divides the current leading index.
  Field,
  /// Additionally |generator| >= |residual|, so quotients stay in R°.
  Integral,
};

namespace tate_detail {

template <CoeffDomain D>
struct DivisorInfo {
  MonomialIndex lead;
  typename D::Elem a;
  Rational norm;
};

template <CoeffDomain D>
std::vector<DivisorInfo<D>> divisor_info(const std::vector<TatePoly<D>>& gens) {
  std::vector<DivisorInfo<D>> out;
  for (const auto& g : gens) {
    require(!g.is_zero(), "unprepared_generator", "divisor is zero at precision");
    const auto lead = leading_data(g);
    out.push_back({lead.index, lead.coefficient, lead.norm});
  }
  return out;
}

/// gens[i] may be used iff allowed(i).
template <CoeffDomain D, class Allowed>
Division<D> divide_with(const TatePoly<D>& y, const std::vector<TatePoly<D>>& gens, Allowed allowed,
                        int step_budget) {
  const auto info = divisor_info(gens);
  const auto& d = y.domain();
  const auto& ring = y.ring();
  Division<D> out{{}, TatePoly<D>::zero(ring, y.prec()), 0};
  for (std::size_t i = 0; i < gens.size(); ++i) out.quotients.push_back(TatePoly<D>::zero(ring, y.prec()));
  auto r = y;
  while (!r.is_zero()) {
    if (++out.steps > step_budget) throw_precondition("budget_exceeded", "division step budget exhausted");
    const auto lead = leading_data(r);
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!componentwise_leq(info[i].lead, lead.index) || !allowed(i, lead.norm)) continue;
      if (!pick) {
        pick = i;
        continue;
      }
      const auto c = grlex_compare(info[i].lead, info[*pick].lead);
      if (c < 0 || (c == 0 && d.degree(info[i].a) < d.degree(info[*pick].a))) pick = i;
    }
    if (!pick) {
      const auto term = TatePoly<D>::monomial(ring, lead.coefficient, lead.index).truncated(r.prec());
      out.remainder = tate_add(out.remainder, term);
      r = tate_sub(r, term);
      continue;
    }
    const auto& g = info[*pick];
    const auto q = d.mul(lead.coefficient, d.inv(g.a));
    const auto shift = lead.index - g.lead;
    out.quotients[*pick] =
        tate_add(out.quotients[*pick], TatePoly<D>::monomial(ring, q, shift).truncated(r.prec() - g.norm));
    r = tate_sub(r, tate_mul_term(gens[*pick], q, shift));
  }
  out.remainder = out.remainder.truncated(r.prec());
  return out;
}

}  // namespace tate_detail

/// y = sum a_i gens_i + remainder with |a_i| |gens_i| <= |y| and no
/// remainder index divisible by a usable generator lead.
template <CoeffDomain D>
Division<D> norm_bounded_divide(const TatePoly<D>& y, const std::vector<TatePoly<D>>& gens,
                                DivisionRule rule = DivisionRule::Field, int step_budget = 100000) {
  const auto info = tate_detail::divisor_info(gens);
  return tate_detail::divide_with(
      y, gens,
      [&](std::size_t i, const Rational& residual_norm) {
        return rule == DivisionRule::Field || info[i].norm <= residual_norm;
      },
      step_budget);
}

/// sum a_i gens_i + remainder.
template <CoeffDomain D>
TatePoly<D> reassemble(const Division<D>& div, const std::vector<TatePoly<D>>& gens) {
  auto out = div.remainder;
  for (std::size_t i = 0; i < gens.size(); ++i) out = tate_add(out, tate_mul(div.quotients[i], gens[i]));
  return out;
}

// ---------------------------------------------------------------- afg

/// Generators of an ideal H of R° together with, for each level k = 1..m,
/// elements of H of norm exactly c^k (c = p^{-u_exp}) whose leads are
/// minimal for divisibility.
template <CoeffDomain D>
struct AfgWitness {
  std::vector<TatePoly<D>> base;
  std::vector<std::vector<TatePoly<D>>> levels;
  Rational u_exp;
  /// Norm exponent of delta = min |base_i|.
  Rational delta_exp;
  int m = 0;

  std::vector<TatePoly<D>> all() const {
    auto out = base;
    for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
    return out;
  }
};

template <CoeffDomain D>
AfgWitness<D> afg_witness(const std::vector<TatePoly<D>>& gens, const Rational& u_exp) {
  require(!gens.empty(), "unprepared_generator", "ideal needs at least one generator");
  require(u_exp > 0, "bad_unit", "the unit must be topologically nilpotent");
  const auto& d = gens.front().domain();
  require(in_value_group(d, u_exp), "value_group", "|u| is not in the value group");
  AfgWitness<D> w{gens, {}, u_exp, Rational(0), 0};
  const auto info = tate_detail::divisor_info(gens);
  for (const auto& g : info) {
    require(g.norm >= 0, "not_integral", "ideal generators must have norm at most 1");
    w.delta_exp = std::max(w.delta_exp, g.norm);
  }
  w.m = static_cast<int>(robba::ceil(w.delta_exp / u_exp));
  for (int k = 1; k <= w.m; ++k) {
    const Rational level_norm = u_exp * k;
    // Candidates mu * g in H with |mu| <= 1 and norm exactly c^k.
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (info[i].norm <= level_norm) candidates.push_back(i);
    }
    std::vector<TatePoly<D>> level;
    for (std::size_t i : candidates) {
      bool minimal = true;
      for (std::size_t j : candidates) {
        if (info[j].lead == info[i].lead) {
          // Equal leads: keep the least degree, then the first.
          const auto dj = d.degree(info[j].a), di = d.degree(info[i].a);
          if (dj < di || (dj == di && j < i)) minimal = false;
        } else if (componentwise_leq(info[j].lead, info[i].lead)) {
          minimal = false;
        }
      }
      if (!minimal) continue;
      const auto mu = d.unit_of_norm(level_norm - info[i].norm);
      if (!mu) throw_precondition("value_group", "generator norm is not in the value group");
      level.push_back(tate_scale(gens[i], *mu));
    }
    w.levels.push_back(std::move(level));
  }
  return w;
}

/// Reduces y against the witness: residuals of norm at most delta use the
/// base, residuals in (c^{k+1}, c^k] use level k. Throws
/// Precondition("not_generated") if y does not reduce to zero.
template <CoeffDomain D>
Division<D> reduce_against_witness(const TatePoly<D>& y, const AfgWitness<D>& w, int step_budget = 100000) {
  const auto gens = w.all();
  std::vector<int> level_of;
  for (std::size_t i = 0; i < w.base.size(); ++i) level_of.push_back(0);
  for (std::size_t k = 0; k < w.levels.size(); ++k) {
    for (std::size_t i = 0; i < w.levels[k].size(); ++i) level_of.push_back(static_cast<int>(k) + 1);
  }
  auto div = tate_detail::divide_with(
      y, gens,
      [&](std::size_t i, const Rational& residual_norm) {
        if (residual_norm >= w.delta_exp) return level_of[i] == 0;
        return level_of[i] == static_cast<int>(robba::floor(residual_norm / w.u_exp));
      },
      step_budget);
  if (!div.remainder.is_zero()) {
    throw_precondition("not_generated", "element not generated by the witness; remainder " + div.remainder.to_string());
  }
  return div;
}

}  // namespace robba
