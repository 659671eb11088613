#include "robba/error.hpp"
#include "robba/factor.hpp"
#include "support/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <optional>

using namespace robba;
using namespace robba::testing;

namespace {

WittElem linear(const RingPtr& ring, const CoeffElem& u) {
  return WittElem::varpi_power(ring, 1) - WittElem::teichmuller(ring, u);
}

// Matches each expected root to a distinct recovered one agreeing with it at
// the recovered precision.
bool same_roots(std::vector<CoeffElem> found, const std::vector<CoeffElem>& expected) {
  if (found.size() != expected.size()) return false;
  for (const auto& e : expected) {
    auto it = std::find_if(found.begin(), found.end(), [&](const CoeffElem& f) { return agree(f, e); });
    if (it == found.end()) return false;
    found.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("factor_linear examples") {
  auto ring = make_ring(EMode::EqualChar, 2, 8);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  auto t2 = CoeffElem::t_power(f, Rational(2));

  auto one = factor_linear(linear(ring, t));
  CHECK(same_roots(one.roots, {t}));
  CHECK(agree(one.y, WittElem::one(ring)));

  auto s = WittElem::teichmuller(ring, CoeffElem::constant(f, 1) + CoeffElem::t_power(f, Rational(1, 2)));
  auto two = factor_linear(linear(ring, t) * linear(ring, t2) * s);
  CHECK(same_roots(two.roots, {t, t2}));
  CHECK(agree(two.y, s));
  CHECK(agree(expand_factorization(two), linear(ring, t) * linear(ring, t2) * s));

  CHECK_THROWS_AS(factor_linear(s), Error);
  try {
    factor_linear(s);
  } catch (const Error& e) {
    CHECK(e.id() == "input_stable");
  }

  auto mixed = make_ring(EMode::MixedCharPTypical, 2, 4);
  try {
    factor_linear(linear(mixed, CoeffElem::t_power(mixed->field(), Rational(1))));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.id() == "backend_unsupported");
  }

  auto at_zero = factor_linear(WittElem::varpi_power(ring, 1));
  REQUIRE(at_zero.roots.size() == 1);
  CHECK(at_zero.roots[0].is_zero());
}

TEST_CASE("factor_linear repeated roots and clusters") {
  auto ring = make_ring(EMode::EqualChar, 2, 10);
  auto f = ring->field();
  auto t = CoeffElem::t_power(f, Rational(1));
  auto u = t + CoeffElem::t_power(f, Rational(3));
  auto v = CoeffElem::t_power(f, Rational(3, 2));

  auto sq = factor_linear(linear(ring, t) * linear(ring, t));
  CHECK(same_roots(sq.roots, {t, t}));

  auto cluster = factor_linear(linear(ring, t) * linear(ring, u) * linear(ring, v));
  CHECK(same_roots(cluster.roots, {t, u, v}));
  for (const auto& r : cluster.roots) CHECK(r.tprec() > Rational(3));
}

TEST_CASE("roots outside the field") {
  auto ring = make_ring(EMode::EqualChar, 2, 8);
  auto f = ring->field();
  // ϖ^3 - [t^4]: slope 4/3.
  auto x = WittElem::varpi_power(ring, 3) - WittElem::teichmuller(ring, CoeffElem::t_power(f, Rational(4)));
  try {
    factor_linear(x);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.id() == "root_outside_field");
    CHECK(std::string(e.what()).find("4/3") != std::string::npos);
  }
  // ϖ^2 + [t]ϖ + [t^2]: residual polynomial c^2 + c + 1, irreducible over F_2.
  auto y = WittElem::varpi_power(ring, 2) + WittElem::teichmuller(ring, CoeffElem::t_power(f, Rational(1))) *
                                                WittElem::varpi_power(ring, 1) +
           WittElem::teichmuller(ring, CoeffElem::t_power(f, Rational(2)));
  CHECK_THROWS_AS(factor_linear(y), Error);

  // Over F_4 the same element splits.
  auto ring4 = make_ring(EMode::EqualChar, 2, 8, 2);
  auto f4 = ring4->field();
  auto y4 = WittElem::varpi_power(ring4, 2) + WittElem::teichmuller(ring4, CoeffElem::t_power(f4, Rational(1))) *
                                                  WittElem::varpi_power(ring4, 1) +
            WittElem::teichmuller(ring4, CoeffElem::t_power(f4, Rational(2)));
  auto split = factor_linear(y4);
  CHECK(split.roots.size() == 2);
  CHECK(agree(expand_factorization(split), y4));
}

TEST_CASE("factor_linear round trip") {
  std::mt19937_64 rng(53);
  for (int p : {2, 3}) {
    auto ring = make_ring(EMode::EqualChar, p, 12);
    auto f = ring->field();
    std::uniform_int_distribution<int> count(1, 3);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
      // Stable y: unit constant term.
      auto y = random_witt(ring, rng, 2, 2) * WittElem::varpi_power(ring, 1) +
               WittElem::teichmuller(ring, CoeffElem::constant(f, 1) + random_coeff(f, rng, 2, 1, 3));
      REQUIRE(is_stable(y));
      std::vector<CoeffElem> roots;
      const int k = count(rng);
      WittElem x = y;
      for (int j = 0; j < k; ++j) {
        CoeffElem u = random_coeff(f, rng, 2, 1, 3);
        if (u.is_zero()) u = CoeffElem::t_power(f, Rational(1));
        roots.push_back(u);
        x = x * linear(ring, u);
      }
      std::optional<Factorization> fac;
      try {
        fac = factor_linear(x);
      } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::Indeterminate);
        continue;
      }
      ++checked;
      CHECK(root_count(x) == k);
      CHECK(same_roots(fac->roots, roots));
      CHECK(agree(expand_factorization(*fac), x));
    }
    CHECK(checked >= 20);
  }
}
