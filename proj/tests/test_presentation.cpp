#include "robba/error.hpp"
#include "robba/presentation.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace robba;
using namespace robba::testing;

namespace {

CoeffElem random_center(const FieldPtr& f, std::mt19937_64& rng) {
  auto u = random_coeff(f, rng, 2, 1, 3);
  if (u.is_zero()) u = CoeffElem::t_power(f, Rational(1));
  return u;
}

}  // namespace

TEST_CASE("stable_reduce examples") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  auto w = WittElem::varpi_power(ring, 1);
  auto r = stable_reduce(w, t);
  CHECK(agree(r.y, WittElem::teichmuller(ring, t)));
  CHECK(agree(r.q, WittElem::one(ring)));

  auto s = WittElem::teichmuller(ring, CoeffElem::t_power(f, Rational(1, 2)) + CoeffElem::constant(f, 1));
  auto r2 = stable_reduce(s, CoeffElem::t_power(f, Rational(3, 2)));
  CHECK(agree(r2.y, s));
  CHECK(agree(r2.q, WittElem::zero(ring)));
}

TEST_CASE("stable_reduce reconstructs its input") {
  for (auto mode : {EMode::EqualChar, EMode::MixedCharPTypical}) {
    auto ring = mode == EMode::EqualChar ? make_ring(mode) : make_ring(mode, 2, 4, 1, 64);
    std::mt19937_64 rng(17);
    auto f = ring->field();
    for (int trial = 0; trial < 100; ++trial) {
      auto x = random_witt(ring, rng);
      auto u = random_center(f, rng);
      for (auto strategy : {ReduceStrategy::FirstStable, ReduceStrategy::FullSubstitution}) {
        auto r = stable_reduce(x, u, strategy);
        CHECK(is_stable(r.y));
        auto pi = WittElem::varpi_power(ring, 1) - WittElem::teichmuller(ring, u);
        CHECK(agree(r.y + r.q * pi, x));
      }
    }
  }
}

TEST_CASE("stable presentation examples") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  auto pres = stable_presentation(WittElem::varpi_power(ring, 1), t);
  REQUIRE(pres.depth() == 6);
  CHECK(agree(pres.entries[0], WittElem::teichmuller(ring, t)));
  CHECK(agree(pres.entries[1], WittElem::one(ring)));
  for (int i = 2; i < pres.depth(); ++i) CHECK(lambda_norm(pres.entries[i]).is_below());

  auto pi = WittElem::varpi_power(ring, 1) - WittElem::teichmuller(ring, t);
  auto pres2 = stable_presentation(pi * pi, t);
  CHECK(lambda_norm(pres2.entries[0]).is_below());
  CHECK(lambda_norm(pres2.entries[1]).is_below());
  CHECK(agree(pres2.entries[2], WittElem::one(ring)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_witt(ring, rng);
    auto u = random_center(f, rng);
    auto p = stable_presentation(x, u);
    for (const auto& e : p.entries) CHECK(is_stable(e));
    CHECK(agree(reassemble(p), x));
  }
}

TEST_CASE("H(u,r) examples") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  auto w = WittElem::varpi_power(ring, 1);
  for (auto rho : {Rational(0), Rational(1, 2), Rational(3)}) {
    CHECK(eval_H(t, Radius::exp(rho), w) == NormExp::exact(Rational(1)));
  }
  auto pi = w - WittElem::teichmuller(ring, t);
  CHECK(eval_H(t, Radius::zero(), pi).is_below());
  CHECK(eval_H(t, Radius::zero(), w) == NormExp::exact(Rational(1)));
}

TEST_CASE("H(u,r) of a linear polynomial") {
  for (auto mode : {EMode::EqualChar, EMode::MixedCharPTypical}) {
    auto ring = mode == EMode::EqualChar ? make_ring(mode) : make_ring(mode, 2, 4, 1, 64);
    auto f = ring->field();
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      auto u = random_center(f, rng);
      auto v = random_center(f, rng);
      if (u == v) continue;
      auto x = WittElem::varpi_power(ring, 1) - WittElem::teichmuller(ring, v);
      const auto h0 = eval_H(u, Radius::zero(), x);
      REQUIRE(h0.is_exact());
      for (auto rho : {Rational(0), Rational(1, 4), Rational(1), Rational(3, 2), Rational(2)}) {
        const auto h = eval_H(u, Radius::exp(rho), x);
        CHECK(h == NormExp::exact(std::min(rho + 1, h0.value())));
      }
    }
  }
}

TEST_CASE("H is independent of the presentation, multiplicative and bounded by λ") {
  for (auto mode : {EMode::EqualChar, EMode::MixedCharPTypical}) {
    auto ring = mode == EMode::EqualChar ? make_ring(mode) : make_ring(mode, 2, 4, 1, 64);
    auto f = ring->field();
    std::mt19937_64 rng(29);
    int decided = 0;
    for (int trial = 0; trial < 40; ++trial) {
      auto x = random_witt(ring, rng, 2, 2);
      auto y = random_witt(ring, rng, 2, 2);
      auto u = random_center(f, rng);
      auto p1 = stable_presentation(x, u, -1, ReduceStrategy::FirstStable);
      auto p2 = stable_presentation(x, u, -1, ReduceStrategy::FullSubstitution);
      for (auto rho : {Rational(0), Rational(1, 2), Rational(2)}) {
        auto r = Radius::exp(rho);
        auto a = eval_H(p1, r), b = eval_H(p2, r);
        if (a.is_exact() && b.is_exact()) CHECK(a == b);
        auto hx = eval_H(u, r, x), hy = eval_H(u, r, y), hxy = eval_H(u, r, x * y);
        if (hx.is_exact() && hy.is_exact() && hxy.is_exact()) {
          CHECK(hxy.value() == hx.value() + hy.value());
          ++decided;
        }
        auto l = lambda_norm(x);
        if (hx.is_exact() && l.is_exact()) CHECK(hx.value() >= l.value());
      }
    }
    CHECK(decided >= 60);
  }
}

TEST_CASE("H(u,0) vanishes exactly on multiples of π") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = random_center(f, rng);
    auto pi = WittElem::varpi_power(ring, 1) - WittElem::teichmuller(ring, u);
    auto z = random_witt(ring, rng, 2, 2);
    auto multiple = pi * z;
    CHECK(eval_H(u, Radius::zero(), multiple).is_below());
    CHECK_NOTHROW(div_by_linear(multiple, u));
    auto unit = multiple + WittElem::one(ring);
    CHECK(eval_H(u, Radius::zero(), unit).is_exact());
    CHECK_THROWS_AS(div_by_linear(unit, u), Error);
  }
}

TEST_CASE("type-5 values") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  auto pi = WittElem::varpi_power(ring, 1) - WittElem::teichmuller(ring, t);
  const Rational rho(1, 2);
  auto b = eval_beta5(t, rho, Sign::Plus, pi);
  CHECK(b.value == GammaValue::of(rho + 1, 1));
  CHECK(b.level == 1);
  auto s = CoeffElem::t_power(f, Rational(3, 4));
  auto bs = eval_beta5(t, rho, Sign::Plus, WittElem::teichmuller(ring, s));
  CHECK(bs.value == GammaValue::of(Rational(3, 4), 0));

  auto third = eval_beta5(t, Rational(1, 3), Sign::Plus, pi);
  CHECK(third.coincides_with_rank1);
  CHECK(third.value == GammaValue::of(Rational(4, 3), 0));

  std::mt19937_64 rng(37);
  int decided = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto x = random_witt(ring, rng);
    auto u = random_center(f, rng);
    auto h = eval_H(u, Radius::exp(rho), x);
    Beta5Value plus, minus;
    try {
      plus = eval_beta5(u, rho, Sign::Plus, x);
      minus = eval_beta5(u, rho, Sign::Minus, x);
    } catch (const Error& e) {
      CHECK(e.category() == ErrorCategory::Indeterminate);
      continue;
    }
    if (h.is_exact() && !plus.below && !minus.below) {
      ++decided;
      CHECK(plus.value.e() == h.value());
      CHECK(minus.value.e() == h.value());
      CHECK(minus.value <= GammaValue::of(h.value()));
      CHECK(GammaValue::of(h.value()) <= plus.value);
    }
  }
  CHECK(decided >= 40);
}

TEST_CASE("Γ is a totally ordered group") {
  std::vector<GammaValue> grid;
  for (int e = -2; e <= 2; ++e)
    for (int k = -2; k <= 2; ++k) grid.push_back(GammaValue::of(Rational(e, 2), k));
  grid.push_back(GammaValue::zero());
  CHECK(GammaValue::one_plus() * GammaValue::one_minus() == GammaValue::of(Rational(0)));
  CHECK(GammaValue::one_minus() < GammaValue::of(Rational(0)));
  CHECK(GammaValue::of(Rational(0)) < GammaValue::one_plus());
  for (const auto& a : grid) {
    CHECK(GammaValue::zero() <= a);
    for (const auto& b : grid) {
      CHECK(((a < b) + (a == b) + (a > b)) == 1);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(a * b == b * a);
      for (const auto& c : grid) {
        if (c.is_zero()) continue;
        if (a <= b) CHECK(a * c <= b * c);
        if (a <= b && b <= c) CHECK(a <= c);
      }
    }
  }
}
