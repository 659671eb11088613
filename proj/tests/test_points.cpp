#include "robba/error.hpp"
#include "robba/points.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace robba;
using namespace robba::testing;

namespace {

CoeffElem center(const FieldPtr& f, std::mt19937_64& rng) {
  return random_coeff(f, rng, 2, 1, 4);
}

Radius random_radius(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 12);
  return Radius::exp(Rational(num(rng), 4));
}

CoeffElem tpow(const FieldPtr& f, Rational e) { return CoeffElem::t_power(f, e); }

}  // namespace

TEST_CASE("center distance is |u - u'|") {
  for (auto mode : {EMode::EqualChar, EMode::MixedCharPTypical}) {
    auto ring = mode == EMode::EqualChar ? make_ring(mode) : make_ring(mode, 2, 4, 1, 64);
    auto f = ring->field();
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      auto u = center(f, rng), v = center(f, rng);
      auto d = center_distance(ring, u, v);
      auto diff = coeff_sub(u, v);
      if (diff.is_zero()) {
        CHECK(d.is_below());
      } else {
        CHECK(d == coeff_norm(diff));
      }
    }
  }
}

TEST_CASE("same_point") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = tpow(f, Rational(1));
  auto t5 = coeff_add(t, tpow(f, Rational(5)));
  for (int rho = 0; rho <= 4; ++rho) {
    CHECK(same_point(ring, t, t, Radius::exp(Rational(rho))));
    CHECK(same_point(ring, t, t5, Radius::exp(Rational(rho))));
  }
  CHECK_FALSE(same_point(ring, t, t5, Radius::exp(Rational(9, 2))));
  CHECK(same_point(ring, t, t, Radius::zero()));
  CHECK_FALSE(same_point(ring, t, tpow(f, Rational(2)), Radius::zero()));
  // Every admissible center lies in the unit disc of the Gauss point.
  CHECK(same_point(ring, t, tpow(f, Rational(2)), Radius::exp(Rational(0))));
  CHECK_FALSE(same_point(ring, t, tpow(f, Rational(2)), Radius::exp(Rational(1, 2))));
  CHECK(same_point(ring, tpow(f, Rational(2)), tpow(f, Rational(3)), Radius::exp(Rational(1))));
}

TEST_CASE("disc relations") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = tpow(f, Rational(1));
  CHECK(disc_relation(ring, {t, Radius::exp(Rational(1))}, {t, Radius::exp(Rational(2))}) == DiscRelation::AContainsB);
  CHECK(disc_relation(ring, {t, Radius::exp(Rational(2))}, {t, Radius::exp(Rational(1))}) == DiscRelation::BContainsA);
  CHECK(disc_relation(ring, {t, Radius::exp(Rational(2))}, {t, Radius::exp(Rational(2))}) == DiscRelation::Equal);
  auto near = coeff_add(t, tpow(f, Rational(3, 2)));
  CHECK(disc_relation(ring, {t, Radius::exp(Rational(2))}, {near, Radius::exp(Rational(2))}) == DiscRelation::Disjoint);
  CHECK(disc_relation(ring, {t, Radius::exp(Rational(1, 2))}, {near, Radius::exp(Rational(2))}) ==
        DiscRelation::AContainsB);
  CHECK(disc_relation(ring, {t, Radius::exp(Rational(1, 2))}, {near, Radius::exp(Rational(1, 2))}) ==
        DiscRelation::Equal);
  CHECK(disc_relation(ring, {t, Radius::zero()}, {near, Radius::exp(Rational(0))}) == DiscRelation::BContainsA);
  CHECK(disc_relation(ring, {t, Radius::zero()}, {near, Radius::zero()}) == DiscRelation::Disjoint);

  // Oracle: ultrametric discs from the exact distance of the centers.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    CenterPoint a{center(f, rng), random_radius(rng)};
    CenterPoint b{center(f, rng), random_radius(rng)};
    const auto diff = coeff_sub(a.u, b.u);
    const Rational Ra = a.r.rho() + 1, Rb = b.r.rho() + 1;
    const bool meet = diff.is_zero() || coeff_norm(diff).value() >= std::min(Ra, Rb);
    DiscRelation expected = DiscRelation::Disjoint;
    if (meet) {
      expected = Ra == Rb ? DiscRelation::Equal : Ra < Rb ? DiscRelation::AContainsB : DiscRelation::BContainsA;
    }
    CHECK(disc_relation(ring, a, b) == expected);
    CHECK(same_point(ring, a.u, b.u, a.r) == (disc_relation(ring, a, {b.u, a.r}) == DiscRelation::Equal));
  }
}

TEST_CASE("classification") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = tpow(f, Rational(1));
  auto zero = CoeffElem::zero(f);
  CHECK(classify(ring, CenterPoint{zero, Radius::zero()}) == PointType::Type1);
  CHECK(classify(ring, CenterPoint{t, Radius::exp(Rational(1, 2))}) == PointType::Type2);
  CHECK(classify(ring, CenterPoint{t, Radius::exp(Rational(1, 3))}) == PointType::Type3);
  CHECK(classify(ring, CenterPoint{zero, Radius::exp(Rational(0))}) == PointType::Type2);
  CHECK(classify(ring, Type5Point{t, Rational(1, 2), Sign::Plus}) == PointType::Type5);
  CHECK(classify(ring, Type5Point{t, Rational(1, 3), Sign::Minus}) == PointType::Type3);
  auto t2 = tpow(f, Rational(2));
  Type4Prefix chain{{{zero, Radius::exp(Rational(1))},
                     {t2, Radius::exp(Rational(2))},
                     {coeff_add(t2, tpow(f, Rational(7, 2))), Radius::exp(Rational(3))}}};
  CHECK(classify(ring, chain) == PointType::Type4);

  Type4Prefix bad{{{zero, Radius::exp(Rational(1))}, {t, Radius::exp(Rational(1, 2))}}};
  CHECK_THROWS_AS(classify(ring, bad), Error);
  CHECK_THROWS_AS(classify(ring, Type4Prefix{}), Error);
  CHECK_THROWS_AS(classify(ring, CenterPoint{t, Radius::exp(Rational(-1))}), Error);
  CHECK_THROWS_AS(classify(ring, CenterPoint{CoeffElem::constant(f, 1), Radius::zero()}), Error);
  CHECK_THROWS_AS(classify(ring, Type5Point{t, Rational(0), Sign::Plus}), Error);

  // With |t| = p^{-1/3} the value group picks up thirds.
  auto ring3 = make_ring(EMode::EqualChar, 2, 6, 1, 16, Rational(1, 3));
  CHECK(classify(ring3, CenterPoint{CoeffElem::t_power(ring3->field(), Rational(3)), Radius::exp(Rational(1, 3))}) ==
        PointType::Type2);
}

TEST_CASE("radius retraction") {
  auto ring = make_ring(EMode::EqualChar);
  auto f = ring->field();
  auto t = tpow(f, Rational(1));
  auto as_center = [](const PointDescriptor& d) { return std::get<CenterPoint>(d); };

  auto noop = as_center(radius_retract(ring, CenterPoint{t, Radius::exp(Rational(1))}, Radius::exp(Rational(2))));
  CHECK(noop.r == Radius::exp(Rational(1)));
  auto gauss = as_center(radius_retract(ring, CenterPoint{t, Radius::zero()}, Radius::exp(Rational(0))));
  CHECK(gauss.r == Radius::exp(Rational(0)));
  CHECK(same_point(ring, gauss.u, CoeffElem::zero(f), gauss.r));

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    CenterPoint d{center(f, rng), trial % 5 == 0 ? Radius::zero() : random_radius(rng)};
    auto r1 = random_radius(rng), r2 = random_radius(rng);
    auto twice = as_center(radius_retract(ring, radius_retract(ring, d, r1), r2));
    auto once = as_center(radius_retract(ring, d, std::max(r1, r2)));
    CHECK(twice.r == once.r);
    CHECK(same_point(ring, twice.u, once.u, once.r));
  }

  auto t2 = tpow(f, Rational(2));
  Type4Prefix chain{{{CoeffElem::zero(f), Radius::exp(Rational(1))},
                     {t2, Radius::exp(Rational(2))},
                     {coeff_add(t2, tpow(f, Rational(7, 2))), Radius::exp(Rational(3))}}};
  auto r = as_center(radius_retract(ring, chain, Radius::exp(Rational(3, 2))));
  CHECK(r.r == Radius::exp(Rational(3, 2)));
  CHECK(same_point(ring, r.u, t2, r.r));
  CHECK_FALSE(same_point(ring, r.u, t, r.r));
  CHECK_THROWS_AS(radius_retract(ring, chain, Radius::exp(Rational(4))), Error);
  CHECK_THROWS_AS(radius_retract(ring, Type5Point{t, Rational(1, 2), Sign::Plus}, Radius::exp(Rational(1))), Error);
}
