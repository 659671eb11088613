// Comparisons of valuations near a point: how far an inequality at a type-5
// point persists to nearby rank-1 points, and membership in rational subsets
// {v : v(f_i) <= v(g) != 0}.
#pragma once

#include "robba/points.hpp"
#include "robba/robba.hpp"

#include <string>
#include <vector>

namespace robba {

/// Given β_{u,r±}(x) <= β_{u,r±}(y), a rational s with
/// H(u, rho′)(x) <= H(u, rho′)(y) for every rho′ strictly between s and rho:
/// s < rho for sign +, s > rho for sign −. The answer is valid, not
/// necessarily the largest such interval.
Rational persistence_interval(const RobbaElem& x, const RobbaElem& y, const CoeffElem& u, const Rational& rho,
                              Sign sign);

struct RationalSubset {
  std::vector<RobbaElem> fs;
  RobbaElem g;
};

/// v(f_i) <= v(g) for every i, at a center or type-5 point. Throws
/// Precondition "zero_denominator" when v(g) vanishes at precision and
/// "point_not_evaluable" for type-4 prefixes.
bool rational_subset_member(const PointDescriptor& d, const RationalSubset& subset);

enum class Membership { In, Out, Error };

struct CoverReport {
  /// matrix[s][j]: sample s against subset j.
  std::vector<std::vector<Membership>> matrix;
  std::vector<std::vector<std::string>> errors;
  /// Samples that every subset decidedly excludes.
  std::vector<std::size_t> uncovered;
  /// Samples with no decided In and at least one Error.
  std::vector<std::size_t> undetermined;
  bool covered() const { return uncovered.empty() && undetermined.empty(); }
};

/// Pointwise check on finitely many samples: an uncovered sample refutes the
/// covering, while a clean report is evidence only.
CoverReport covering_check(const std::vector<RationalSubset>& subsets, const std::vector<PointDescriptor>& samples);

}  // namespace robba
