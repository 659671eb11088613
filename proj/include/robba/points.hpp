// Point descriptors on the adic spectrum: rank-1 points β_{u,r} (types 1-3),
// finite prefixes of nested disc sequences standing for type-4 points, and
// the rank-2 type-5 points β_{u,r±}.
#pragma once

#include "robba/gamma.hpp"
#include "robba/presentation.hpp"

#include <variant>
#include <vector>

namespace robba {

/// β_{u,r}; r = 0 is the type-1 point attached to u.
struct CenterPoint {
  CoeffElem u;
  Radius r;
};

/// Discs D(u_j, r_j), each strictly inside the previous one.
struct Type4Prefix {
  std::vector<CenterPoint> discs;
};

struct Type5Point {
  CoeffElem u;
  Rational rho;
  Sign sign;
};

using PointDescriptor = std::variant<CenterPoint, Type4Prefix, Type5Point>;

enum class PointType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4, Type5 = 5 };

enum class DiscRelation { Equal, AContainsB, BContainsA, Disjoint };
std::string to_string(DiscRelation rel);

/// Exponent of H(u′, 0)(ϖ − [u]), i.e. the distance between the centers.
NormExp center_distance(const RingPtr& ctx, const CoeffElem& u, const CoeffElem& u_prime);

/// β_{u,r} = β_{u′,r} iff rho + 1 <= distance exponent. With r = 0 the points
/// agree only when the centers do.
bool same_point(const RingPtr& ctx, const CoeffElem& u, const CoeffElem& u_prime, const Radius& r);

/// Closed discs D(u, r) = {v : |v - u| <= r/p}.
DiscRelation disc_relation(const RingPtr& ctx, const CenterPoint& a, const CenterPoint& b);

/// Throws Precondition("bad_point") on malformed descriptors: rho < 0 on a
/// center, an empty or non-nested type-4 prefix, rho <= 0 on a type-5 point,
/// or an inadmissible center. A type-5 descriptor whose rho is outside the
/// value group names a rank-1 point and classifies as type 3.
PointType classify(const RingPtr& ctx, const PointDescriptor& d);
void validate(const RingPtr& ctx, const PointDescriptor& d);

/// H(H(v, rho_d), r) = H(v, max(rho_d, r)). A type-4 prefix retracts through
/// its first disc of radius <= r; type-5 points are rejected.
PointDescriptor radius_retract(const RingPtr& ctx, const PointDescriptor& d, const Radius& r);

}  // namespace robba
