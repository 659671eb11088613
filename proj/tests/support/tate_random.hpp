// Random elements and ideal fixtures for the Tate algebra tests.
#pragma once

#include "robba/tate_descent.hpp"
#include "support/random.hpp"

#include <random>

namespace robba::testing {

using LaurentRing = std::shared_ptr<const TateRing<LaurentDomain>>;
using PadicRing = std::shared_ptr<const TateRing<PadicDomain>>;
using LPoly = TatePoly<LaurentDomain>;
using QPoly = TatePoly<PadicDomain>;

inline LaurentRing laurent_ring(std::vector<Rational> weights, Rational prec = Rational(40), int p = 2) {
  return TateRing<LaurentDomain>::create(LaurentDomain(make_field(p, 0, 1, Rational(96))), std::move(weights), prec);
}

inline PadicRing padic_ring(std::vector<Rational> weights, Rational prec = Rational(30), int p = 3) {
  return TateRing<PadicDomain>::create(PadicDomain(p, 60), std::move(weights), prec);
}

/// Nonzero element of norm exponent exactly v * (value group generator).
inline CoeffElem random_elem(const LaurentDomain& d, std::mt19937_64& rng, int v) {
  const auto& f = d.ctx();
  std::uniform_int_distribution<std::uint32_t> coef(1, f->fq().size() - 1);
  std::uniform_int_distribution<int> gap(1, 3);
  std::uniform_int_distribution<int> count(0, 2);
  CoeffElem::Terms terms{{Rational(v), coef(rng)}};
  int e = v;
  for (int i = count(rng); i > 0; --i) {
    e += gap(rng);
    terms[Rational(e)] = coef(rng);
  }
  return CoeffElem(f, terms, f->config().default_tprec + v);
}

inline PadicElem random_elem(const PadicDomain& d, std::mt19937_64& rng, int v) {
  std::uniform_int_distribution<int> digit(0, d.p() - 1);
  BigInt n = 1 + digit(rng) % (d.p() - 1);
  BigInt scale = d.p();
  for (int i = 0; i < 6; ++i, scale *= d.p()) n += digit(rng) * scale;
  return d.make(n, -v, v + d.default_prec());
}

/// Sum of up to max_terms monomials of degree <= max_degree whose term norm
/// exponents lie in [min_norm, max_norm].
template <CoeffDomain D>
TatePoly<D> random_tate(const std::shared_ptr<const TateRing<D>>& ring, std::mt19937_64& rng, int max_terms = 4,
                        int max_degree = 3, int min_norm = 0, int max_norm = 3, bool allow_zero = false) {
  std::uniform_int_distribution<int> count(allow_zero ? 0 : 1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, ring->n() - 1);
  std::uniform_int_distribution<int> nrm(min_norm, max_norm);
  const auto g = ring->domain().value_group_generator();
  typename TatePoly<D>::Terms terms;
  for (int k = count(rng); k > 0; --k) {
    std::vector<int> exps(ring->n(), 0);
    for (int j = deg(rng); j > 0; --j) ++exps[var(rng)];
    MonomialIndex index(exps);
    const Rational w = ring->weight(index) / g;
    if (w.denominator() != 1) continue;
    const int v = nrm(rng) - static_cast<int>(w.numerator());
    terms.insert_or_assign(index, random_elem(ring->domain(), rng, v));
  }
  if (terms.empty() && !allow_zero) terms.emplace(MonomialIndex::zero(ring->n()), ring->domain().one());
  return TatePoly<D>(ring, std::move(terms), ring->default_prec());
}

/// Generators T_i * a_i + c_i + (terms of later index and norm exponent
/// >= eps), one per variable; leads cover every nonconstant index.
template <CoeffDomain D>
std::vector<TatePoly<D>> random_descent_generators(const std::shared_ptr<const TateRing<D>>& ring,
                                                   std::mt19937_64& rng, int eps) {
  const auto& d = ring->domain();
  const auto g = ring->domain().value_group_generator();
  std::vector<TatePoly<D>> out;
  std::uniform_int_distribution<int> extra(1, 2);
  std::uniform_int_distribution<int> var(0, ring->n() - 1);
  for (int i = 0; i < ring->n(); ++i) {
    const auto lead = MonomialIndex::unit(ring->n(), i);
    const int w = static_cast<int>((ring->weight(lead) / g).numerator());
    typename TatePoly<D>::Terms terms;
    terms.emplace(lead, random_elem(d, rng, 0));
    terms.emplace(MonomialIndex::zero(ring->n()), random_elem(d, rng, w + 1));
    for (int k = extra(rng); k > 0; --k) {
      auto index = lead + MonomialIndex::unit(ring->n(), var(rng));
      const int wi = static_cast<int>((ring->weight(index) / g).numerator());
      terms.insert_or_assign(index, random_elem(d, rng, w + eps - wi + static_cast<int>(rng() % 2)));
    }
    out.emplace_back(ring, std::move(terms), ring->default_prec());
  }
  return out;
}

/// x0 with 1 + varpi x0 = sum h_k gens_k for random h_k.
template <CoeffDomain D>
TatePoly<D> random_ideal_start(const std::vector<TatePoly<D>>& gens, const typename D::Elem& varpi,
                               std::mt19937_64& rng) {
  const auto& ring = gens.front().ring();
  const auto& d = ring->domain();
  auto w = TatePoly<D>::zero(ring);
  auto c0 = d.one();
  do {
    w = TatePoly<D>::zero(ring);
    for (const auto& g : gens) w = tate_add(w, tate_mul(random_tate(ring, rng, 3, 2, 0, 2), g));
    c0 = w.coefficient(MonomialIndex::zero(ring->n()));
  } while (d.is_zero(c0));
  // Scale so the constant term is 1.
  w = tate_scale(w, d.inv(c0));
  const auto one = TatePoly<D>::constant(ring, d.one());
  return tate_scale(tate_sub(w, one), d.inv(varpi));
}

}  // namespace robba::testing
