// Shared random generators for the property tests.
#pragma once

#include "robba/gamma.hpp"
#include "robba/witt.hpp"

#include <ostream>

#include <random>

namespace robba {

inline std::ostream& operator<<(std::ostream& os, const NormExp& n) { return os << n.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GammaValue& g) { return os << g.to_string(); }

}  // namespace robba

namespace robba::testing {

inline FieldPtr make_field(int p, int q = 0, int m = 1, Rational tprec = Rational(16)) {
  FieldConfig cfg;
  cfg.p = p;
  cfg.q = q == 0 ? p : q;
  cfg.m = m;
  cfg.default_tprec = tprec;
  return FieldContext::create(cfg);
}

inline RingPtr make_ring(EMode mode, int p = 2, int wprec = 6, int m = 1, Rational tprec = Rational(16),
                         Rational t_exponent = Rational(1)) {
  RingConfig cfg;
  cfg.field.p = p;
  cfg.field.q = p;
  cfg.field.m = m;
  cfg.field.default_tprec = tprec;
  cfg.field.t_exponent = t_exponent;
  cfg.e_mode = mode;
  cfg.wprec = wprec;
  return RingContext::create(cfg);
}

/// Random integral series with up to `max_terms` terms, exponents in
/// [min_exp, max_exp] with denominators dividing p^den_pow.
inline CoeffElem random_coeff(const FieldPtr& f, std::mt19937_64& rng, int max_terms = 3, int min_exp = 0,
                              int max_exp = 3, int den_pow = 1) {
  const std::int64_t den = ipow(f->p(), static_cast<unsigned>(den_pow));
  std::uniform_int_distribution<std::int64_t> num(min_exp * den, max_exp * den);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coef(1, f->fq().size() - 1);
  CoeffElem::Terms terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms[Rational(num(rng), den)] = coef(rng);
  return CoeffElem(f, terms, f->config().default_tprec);
}

inline WittElem random_witt(const RingPtr& ring, std::mt19937_64& rng, int max_terms = 3, int max_exp = 3) {
  std::vector<CoeffElem> digits;
  for (int i = 0; i < ring->wprec(); ++i) digits.push_back(random_coeff(ring->field(), rng, max_terms, 0, max_exp));
  return WittElem(ring, digits);
}

/// Equality of the common known part: levels and t-precision both cut to the
/// smaller of the two.
inline bool agree(const CoeffElem& a, const CoeffElem& b) {
  const auto prec = std::min(a.tprec(), b.tprec());
  return a.truncated(prec).terms() == b.truncated(prec).terms();
}

inline bool agree(const WittElem& a, const WittElem& b) {
  const int levels = std::min(a.levels(), b.levels());
  for (int i = 0; i < levels; ++i) {
    if (!agree(a.digit(i), b.digit(i))) return false;
  }
  return true;
}

}  // namespace robba::testing
