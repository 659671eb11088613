// Factorization x = y · Π (ϖ − [u_j]) with y stable, for the equal
// characteristic backend where W(O_L)_E = O_L[[ϖ]] and the roots are the
// zeros of Σ x̄_i z^i in the disc |z| <= p^{-1}.
#pragma once

#include "robba/witt.hpp"

#include <vector>

namespace robba {

struct Factorization {
  WittElem y;
  /// With multiplicity; each root carries the t-precision it is known to.
  std::vector<CoeffElem> roots;
};

/// Roots come from the Newton polygon of the digit series, one slope at a
/// time, with residual polynomials solved over F_{q^m}. Errors:
/// Precondition "input_stable" (nothing to factor), "backend_unsupported"
/// (mixed characteristic), "root_outside_field" (a slope outside Z[1/p] or a
/// residual polynomial that does not split); Indeterminate when precision
/// does not separate the roots.
Factorization factor_linear(const WittElem& x);

/// Number of roots: the largest level attaining λ(x).
int root_count(const WittElem& x);

/// y · Π (ϖ − [u_j]).
WittElem expand_factorization(const Factorization& f);

}  // namespace robba
