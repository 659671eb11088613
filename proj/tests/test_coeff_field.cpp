#include "robba/coeff_field.hpp"
#include "robba/error.hpp"

#include <doctest.h>

#include <random>

using namespace robba;

namespace {

FieldPtr field(int p, int q = 0, int m = 1, Rational tprec = Rational(16)) {
  FieldConfig cfg;
  cfg.p = p;
  cfg.q = q == 0 ? p : q;
  cfg.m = m;
  cfg.default_tprec = tprec;
  return FieldContext::create(cfg);
}

CoeffElem mono(const FieldPtr& f, FqElem c, Rational e) { return CoeffElem::monomial(f, c, e); }

CoeffElem random_elem(const FieldPtr& f, std::mt19937_64& rng, bool allow_zero_lead = true) {
  CoeffElem::Terms terms;
  std::uniform_int_distribution<int> num(0, 12), den_pow(0, 2), nterms(1, 5);
  std::uniform_int_distribution<std::uint32_t> coef(allow_zero_lead ? 0 : 1, f->fq().size() - 1);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    const Rational e(num(rng), ipow(f->p(), den_pow(rng)));
    terms[e] = coef(rng);
  }
  if (terms.begin()->second == 0) terms.begin()->second = 1;
  return CoeffElem(f, terms, f->config().default_tprec);
}

}  // namespace

TEST_CASE("finite field tables") {
  for (auto [p, d] : {std::pair{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 6}, {7, 2}}) {
    FiniteField fq(p, default_modulus(p, d));
    CHECK(fq.size() == static_cast<std::uint32_t>(ipow(p, d)));
    for (FqElem a = 1; a < fq.size(); ++a) {
      CHECK(fq.mul(a, fq.inv(a)) == 1);
      CHECK(fq.frobenius_inverse(fq.frobenius(a, 1), 1) == a);
      CHECK(fq.pow(a, fq.size() - 1) == 1);
    }
  }
  CHECK_THROWS_AS(FiniteField(2, FpPoly{1, 0, 1}), Error);  // x^2+1 = (x+1)^2
}

TEST_CASE("field config validation") {
  CHECK_THROWS_AS(field(4), Error);
  CHECK_THROWS_AS(field(2, 6), Error);
  auto f = field(2, 4, 2);
  CHECK(f->fq().size() == 16);
  CHECK(f->q_log() == 2);
}

TEST_CASE("addition") {
  auto f = field(2);
  auto s = mono(f, 1, Rational(1, 2)) + mono(f, 1, Rational(1));
  CHECK(s.terms().size() == 2);
  CHECK((mono(f, 1, Rational(1)) + mono(f, 1, Rational(1))).is_zero());

  auto f3 = field(3);
  auto t = mono(f3, 1, Rational(1));
  CHECK((t + t).terms().at(Rational(1)) == 2);
  CHECK((t + t + t).is_zero());

  auto a = CoeffElem(f, {{Rational(1, 2), 1}}, Rational(2));
  auto b = CoeffElem(f, {{Rational(1, 2), 1}, {Rational(3), 1}}, Rational(16));
  auto c = a - b;
  CHECK(c.is_zero());
  CHECK(c.tprec() == Rational(2));
}

TEST_CASE("multiplication and precision propagation") {
  auto f = field(3);
  auto one = CoeffElem::constant(f, 1);
  auto t = mono(f, 1, Rational(1));
  auto x = one + t;
  auto sq = x * x;
  CHECK(sq.terms().at(Rational(0)) == 1);
  CHECK(sq.terms().at(Rational(1)) == 2);
  CHECK(sq.terms().at(Rational(2)) == 1);
  CHECK((mono(f, 1, Rational(1, 3)) * mono(f, 1, Rational(2, 3))).terms() == t.terms());

  auto lossy = CoeffElem(f, {{Rational(1), 1}}, Rational(4));
  auto prod = lossy * CoeffElem(f, {{Rational(2), 1}}, Rational(16));
  CHECK(prod.tprec() == Rational(6));
}

TEST_CASE("inverse") {
  auto f = field(2);
  auto t = mono(f, 1, Rational(1));
  auto ti = coeff_inv(t);
  CHECK(ti.valuation() == Rational(-1));
  auto x = CoeffElem::constant(f, 1) + t;
  auto xi = coeff_inv(x);
  auto prod = x * xi;
  CHECK(prod.terms().size() == 1);
  CHECK(prod.terms().at(Rational(0)) == 1);
  CHECK_THROWS_AS(coeff_inv(CoeffElem::zero(f, Rational(5))), Error);

  std::mt19937_64 rng(7);
  auto f5 = field(5, 25);
  for (int i = 0; i < 40; ++i) {
    auto y = random_elem(f5, rng);
    auto yi = coeff_inv(y);
    CHECK(yi.valuation() == -y.valuation());
    auto pr = y * yi;
    REQUIRE(!pr.is_zero());
    CHECK(pr.terms().begin()->first == Rational(0));
    CHECK(pr.terms().size() == 1);
  }
}

TEST_CASE("q-th roots") {
  std::mt19937_64 rng(11);
  for (auto [p, q, m] : {std::tuple{2, 2, 1}, {2, 4, 2}, {3, 9, 1}, {5, 5, 2}}) {
    auto f = field(p, q, m);
    CHECK(coeff_qth_root(mono(f, 1, Rational(1))) == CoeffElem(f, {{Rational(1, q), 1}}, Rational(16, q)));
    for (int i = 0; i < 50; ++i) {
      auto x = random_elem(f, rng);
      auto r = coeff_qth_root(x);
      auto back = coeff_pow(r, static_cast<std::uint64_t>(q));
      CHECK(back.terms() == x.truncated(back.tprec()).terms());
    }
  }
}

TEST_CASE("norm") {
  auto f = field(2);
  CHECK(coeff_norm(mono(f, 1, Rational(1))) == NormExp::exact(Rational(1)));
  CHECK(coeff_norm(mono(f, 1, Rational(1, 2)) + mono(f, 1, Rational(3))) == NormExp::exact(Rational(1, 2)));
  CHECK(coeff_norm(CoeffElem::zero(f, Rational(5))) == NormExp::below(Rational(5)));

  std::mt19937_64 rng(3);
  auto f3 = field(3, 9);
  for (int i = 0; i < 100; ++i) {
    auto x = random_elem(f3, rng);
    auto y = random_elem(f3, rng);
    CHECK(coeff_norm(x * y).exponent() == coeff_norm(x).exponent() + coeff_norm(y).exponent());
    auto s = x + y;
    if (!s.is_zero()) {
      CHECK(coeff_norm(s).exponent() >= std::min(coeff_norm(x).exponent(), coeff_norm(y).exponent()));
      if (x.valuation() != y.valuation()) {
        CHECK(coeff_norm(s).exponent() == std::min(coeff_norm(x).exponent(), coeff_norm(y).exponent()));
      }
    }
  }
}

TEST_CASE("norm comparisons") {
  auto a = NormExp::exact(Rational(2));
  auto b = NormExp::below(Rational(3));
  CHECK(compare_norms(a, b) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare_norms(NormExp::exact(Rational(4)), b), Error);
  CHECK(norm_max(a, b) == a);
  CHECK(norm_max(NormExp::exact(Rational(4)), b) == b);
}
