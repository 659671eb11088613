#include "robba/points.hpp"

#include "robba/error.hpp"

namespace robba {

std::string to_string(DiscRelation rel) {
  switch (rel) {
    case DiscRelation::Equal: return "equal";
    case DiscRelation::AContainsB: return "a_contains_b";
    case DiscRelation::BContainsA: return "b_contains_a";
    case DiscRelation::Disjoint: return "disjoint";
  }
  throw_internal("unknown disc relation");
}

NormExp center_distance(const RingPtr& ctx, const CoeffElem& u, const CoeffElem& u_prime) {
  require_admissible_center(u);
  require_admissible_center(u_prime);
  const auto x = WittElem::varpi_power(ctx, 1) - WittElem::teichmuller(ctx, u);
  return eval_H(u_prime, Radius::zero(), x);
}

namespace {

// Exponent of r/p; unset for r = 0.
std::optional<Rational> disc_exponent(const Radius& r) {
  if (r.is_zero()) return std::nullopt;
  return r.rho() + 1;
}

bool centers_equal(const CoeffElem& u, const CoeffElem& v) { return coeff_sub(u, v).is_zero(); }

}  // namespace

bool same_point(const RingPtr& ctx, const CoeffElem& u, const CoeffElem& u_prime, const Radius& r) {
  require_admissible_center(u);
  require_admissible_center(u_prime);
  const auto R = disc_exponent(r);
  if (!R) return centers_equal(u, u_prime);
  const auto dist = center_distance(ctx, u, u_prime);
  if (dist.is_exact()) return *R <= dist.value();
  if (*R <= dist.value()) return true;
  throw_indeterminate("center distance is below p^-" + to_string(dist.value()) + ", cannot compare with rho + 1 = " +
                      to_string(*R));
}

DiscRelation disc_relation(const RingPtr& ctx, const CenterPoint& a, const CenterPoint& b) {
  const auto Ra = disc_exponent(a.r);
  const auto Rb = disc_exponent(b.r);
  if (!Ra && !Rb) return centers_equal(a.u, b.u) ? DiscRelation::Equal : DiscRelation::Disjoint;
  // The larger disc has the smaller exponent.
  const Rational needed = !Ra ? *Rb : !Rb ? *Ra : std::min(*Ra, *Rb);
  const auto dist = center_distance(ctx, a.u, b.u);
  bool meet;
  if (dist.is_exact()) {
    meet = dist.value() >= needed;
  } else if (dist.value() >= needed) {
    meet = true;
  } else {
    throw_indeterminate("center distance is below p^-" + to_string(dist.value()) + ", cannot compare with radius p^-" +
                        to_string(needed));
  }
  if (!meet) return DiscRelation::Disjoint;
  if (!Ra) return DiscRelation::BContainsA;
  if (!Rb) return DiscRelation::AContainsB;
  if (*Ra == *Rb) return DiscRelation::Equal;
  return *Ra < *Rb ? DiscRelation::AContainsB : DiscRelation::BContainsA;
}

namespace {

void check_center(const CoeffElem& u) {
  if (!admissible_center(u)) throw_precondition("bad_point", "center " + u.to_string() + " has |u| > 1/p");
}

void check_radius(const Radius& r) {
  if (!r.is_zero() && r.rho() < Rational(0)) {
    throw_precondition("bad_point", "rho must be >= 0, got " + to_string(r.rho()));
  }
}

}  // namespace

void validate(const RingPtr& ctx, const PointDescriptor& d) {
  if (const auto* c = std::get_if<CenterPoint>(&d)) {
    check_center(c->u);
    check_radius(c->r);
    return;
  }
  if (const auto* t4 = std::get_if<Type4Prefix>(&d)) {
    if (t4->discs.empty()) throw_precondition("bad_point", "type-4 prefix needs at least one disc");
    for (std::size_t j = 0; j < t4->discs.size(); ++j) {
      const auto& disc = t4->discs[j];
      check_center(disc.u);
      check_radius(disc.r);
      if (disc.r.is_zero()) throw_precondition("bad_point", "type-4 discs need positive radius");
      if (j == 0) continue;
      if (disc_relation(ctx, t4->discs[j - 1], disc) != DiscRelation::AContainsB) {
        throw_precondition("bad_point", "type-4 disc " + std::to_string(j) + " is not strictly inside disc " +
                                            std::to_string(j - 1));
      }
    }
    return;
  }
  const auto& t5 = std::get<Type5Point>(d);
  check_center(t5.u);
  if (t5.rho <= Rational(0)) throw_precondition("bad_point", "type-5 points need rho > 0");
}

PointType classify(const RingPtr& ctx, const PointDescriptor& d) {
  validate(ctx, d);
  const auto& field = *ctx->field();
  if (const auto* c = std::get_if<CenterPoint>(&d)) {
    if (c->r.is_zero()) return PointType::Type1;
    return in_value_group(c->r.rho(), field) ? PointType::Type2 : PointType::Type3;
  }
  if (std::holds_alternative<Type4Prefix>(d)) return PointType::Type4;
  const auto& t5 = std::get<Type5Point>(d);
  return in_value_group(t5.rho, field) ? PointType::Type5 : PointType::Type3;
}

PointDescriptor radius_retract(const RingPtr& ctx, const PointDescriptor& d, const Radius& r) {
  validate(ctx, d);
  check_radius(r);
  if (const auto* c = std::get_if<CenterPoint>(&d)) return CenterPoint{c->u, std::max(c->r, r)};
  if (const auto* t4 = std::get_if<Type4Prefix>(&d)) {
    if (r.is_zero()) throw_precondition("retract_below_prefix", "a type-4 point has positive radius");
    for (const auto& disc : t4->discs) {
      if (disc.r <= r) return CenterPoint{disc.u, r};
    }
    throw_precondition("retract_below_prefix", "radius p^-" + to_string(r.rho()) +
                                                   " is smaller than every disc in the type-4 prefix");
  }
  throw_precondition("bad_point", "radius retraction is defined for rank-1 points only");
}

}  // namespace robba
