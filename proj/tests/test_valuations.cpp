#include "robba/error.hpp"
#include "robba/valuations.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace robba;
using namespace robba::testing;

namespace {

RobbaElem teich(const RingPtr& ring, const Rational& e) {
  return RobbaElem::teichmuller(ring, CoeffElem::t_power(ring->field(), e));
}

RobbaElem pi_at(const RingPtr& ring, const CoeffElem& u) {
  return robba_sub(RobbaElem::varpi_power(ring, 1), RobbaElem::teichmuller(ring, u));
}

// rho′ sampled strictly between a and b.
std::vector<Rational> samples_between(const Rational& a, const Rational& b, int n = 10) {
  std::vector<Rational> out;
  for (int i = 1; i <= n; ++i) out.push_back(a + (b - a) * Rational(i, n + 1));
  return out;
}

bool holds(const RobbaElem& x, const RobbaElem& y, const CoeffElem& u, const Rational& rho) {
  return norm_leq(eval_H(u, Radius::exp(rho), x), eval_H(u, Radius::exp(rho), y));
}

}  // namespace

TEST_CASE("persistence examples") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  const Rational half(1, 2);

  auto s = teich(ring, Rational(1));
  CHECK(persistence_interval(s, s, t, half, Sign::Plus) == Rational(0));

  // H(π) = p^{-(rho+1)} <= |t| = p^{-1} for every rho >= 0.
  auto pi = pi_at(ring, t);
  CHECK(persistence_interval(pi, s, t, half, Sign::Plus) == Rational(0));
  for (const auto& r : samples_between(Rational(0), half)) CHECK(holds(pi, s, t, r));

  // [t^2] against π crosses at rho = 1.
  auto t2 = teich(ring, Rational(2));
  CHECK(persistence_interval(t2, pi, t, half, Sign::Minus) == Rational(1));
  CHECK(persistence_interval(t2, pi, t, half, Sign::Plus) == Rational(0));
  CHECK(persistence_interval(pi, t2, t, Rational(3, 2), Sign::Plus) == Rational(1));
  for (const auto& r : samples_between(Rational(1), Rational(3, 2))) CHECK(holds(pi, t2, t, r));
  CHECK_FALSE(holds(pi, t2, t, Rational(3, 4)));

  // At the crossing radius itself the sign decides.
  CHECK(persistence_interval(pi, t2, t, Rational(1), Sign::Minus) > Rational(1));
  CHECK_THROWS_AS(persistence_interval(pi, t2, t, Rational(1), Sign::Plus), Error);
  CHECK_THROWS_AS(persistence_interval(pi, t2, t, half, Sign::Plus), Error);
}

TEST_CASE("persistence intervals hold at sampled radii") {
  for (auto mode : {EMode::EqualChar, EMode::MixedCharPTypical}) {
    auto ring = mode == EMode::EqualChar ? make_ring(mode) : make_ring(mode, 2, 4, 1, 64);
    auto f = ring->field();
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> rho_num(1, 8);
    int intervals = 0;
    for (int trial = 0; trial < 60; ++trial) {
      auto x = robba_from_witt(random_witt(ring, rng, 2, 3));
      auto y = robba_from_witt(random_witt(ring, rng, 2, 3));
      auto u = random_coeff(f, rng, 2, 1, 3);
      const Rational rho(rho_num(rng), 4);
      const Sign sign = trial % 2 == 0 ? Sign::Plus : Sign::Minus;
      Rational s;
      try {
        const auto bx = eval_beta5(u, rho, sign, x), by = eval_beta5(u, rho, sign, y);
        if (bx.below || by.below) continue;
        if (bx.value > by.value) std::swap(x, y);
        s = persistence_interval(x, y, u, rho, sign);
      } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::Indeterminate);
        continue;
      }
      ++intervals;
      if (sign == Sign::Plus) {
        CHECK(s < rho);
        CHECK(s >= Rational(0));
      } else {
        CHECK(s > rho);
      }
      const auto lo = sign == Sign::Plus ? s : rho;
      const auto hi = sign == Sign::Plus ? rho : s;
      for (const auto& r : samples_between(lo, hi)) {
        try {
          CHECK(holds(x, y, u, r));
        } catch (const Error& e) {
          CHECK(e.category() == ErrorCategory::Indeterminate);
        }
      }
    }
    CHECK(intervals >= 30);
  }
}

TEST_CASE("rational subsets") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto zero = CoeffElem::zero(f);
  auto one = RobbaElem::one(ring);
  auto w = RobbaElem::varpi_power(ring, 1);
  const PointDescriptor gauss = CenterPoint{zero, Radius::exp(Rational(0))};
  CHECK(rational_subset_member(gauss, {{w}, one}));
  CHECK_FALSE(rational_subset_member(gauss, {{one}, w}));
  CHECK_THROWS_AS(rational_subset_member(gauss, {{one}, RobbaElem::zero(ring)}), Error);
  const PointDescriptor t4 = Type4Prefix{{{zero, Radius::exp(Rational(1))}}};
  CHECK_THROWS_AS(rational_subset_member(t4, {{one}, one}), Error);

  // A type-5 point agrees with the rank-1 points its inequality persists to.
  auto t = CoeffElem::t_power(f, Rational(1));
  auto pi = pi_at(ring, t);
  auto t2 = teich(ring, Rational(2));
  const Type5Point plus{t, Rational(1), Sign::Plus}, minus{t, Rational(1), Sign::Minus};
  CHECK_FALSE(rational_subset_member(plus, {{pi}, t2}));
  CHECK(rational_subset_member(minus, {{pi}, t2}));
  const auto s = persistence_interval(pi, t2, t, Rational(1), Sign::Minus);
  for (const auto& r : samples_between(Rational(1), s)) {
    CHECK(rational_subset_member(CenterPoint{t, Radius::exp(r)}, {{pi}, t2}));
  }
  for (const auto& r : samples_between(Rational(1, 2), Rational(1))) {
    CHECK_FALSE(rational_subset_member(CenterPoint{t, Radius::exp(r)}, {{pi}, t2}));
  }
}

TEST_CASE("covering checks") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto one = RobbaElem::one(ring);
  auto w = RobbaElem::varpi_power(ring, 1);
  std::mt19937_64 rng(61);
  std::vector<PointDescriptor> samples;
  samples.push_back(CenterPoint{CoeffElem::zero(f), Radius::exp(Rational(0))});
  std::uniform_int_distribution<int> rho_num(0, 12);
  for (int i = 0; i < 20; ++i) {
    auto u = random_coeff(f, rng, 2, 1, 3);
    if (i % 4 == 3) {
      samples.push_back(Type5Point{u, Rational(rho_num(rng) + 1, 4), i % 8 == 3 ? Sign::Plus : Sign::Minus});
    } else {
      samples.push_back(CenterPoint{u, Radius::exp(Rational(rho_num(rng), 4))});
    }
  }
  auto both = covering_check({{{w}, one}, {{one}, w}}, samples);
  CHECK(both.covered());
  auto single = covering_check({{{one}, w}}, samples);
  REQUIRE_FALSE(single.uncovered.empty());
  CHECK(single.uncovered.front() == 0);
  CHECK(single.matrix[0][0] == Membership::Out);
}

TEST_CASE("membership against closed-form monomial valuations") {
  // H(u, rho)(ϖ^j [c t^a]) = p^{-(j·min(rho + 1, |u|-exponent) + a)}.
  auto ring = make_ring(EMode::EqualChar, 3, 6, 1, Rational(24));
  auto f = ring->field();
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> small(0, 3), rho_num(0, 12), coeff(1, 2);
  auto monomial = [&](int j, const Rational& a) {
    return robba_mul(RobbaElem::varpi_power(ring, j),
                     RobbaElem::teichmuller(ring, CoeffElem::monomial(f, static_cast<FqElem>(coeff(rng)), a)));
  };
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    CoeffElem u = random_coeff(f, rng, 2, 1, 3);
    const Rational rho(rho_num(rng), 3);
    const Rational eu = u.is_zero() ? Rational(1000) : u.valuation();
    auto value = [&](int j, const Rational& a) { return Rational(j) * std::min(rho + 1, eu) + a; };
    RationalSubset subset{{}, RobbaElem::one(ring)};
    std::vector<std::pair<int, Rational>> fs;
    for (int i = 0; i < 2; ++i) fs.emplace_back(small(rng), Rational(small(rng), 3));
    const std::pair<int, Rational> g{small(rng), Rational(small(rng), 3)};
    subset.g = monomial(g.first, g.second);
    bool expected = true;
    for (const auto& [j, a] : fs) {
      subset.fs.push_back(monomial(j, a));
      expected = expected && value(j, a) >= value(g.first, g.second);
    }
    const PointDescriptor d = CenterPoint{u, Radius::exp(rho)};
    try {
      CHECK(rational_subset_member(d, subset) == expected);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.category() == ErrorCategory::Indeterminate);
    }
  }
  CHECK(checked >= 190);
}
