// Stable presentations x = sum_i x_i π^i with π = ϖ - [u], and the
// seminorms H(u, r) and β_{u, r^±} evaluated through them.
#pragma once

#include "robba/gamma.hpp"
#include "robba/robba.hpp"
#include "robba/witt.hpp"

#include <optional>
#include <vector>

namespace robba {

/// Which candidate stable_reduce accepts. Both give valid presentations;
/// they differ whenever x already has a stable partial substitution.
enum class ReduceStrategy {
  FirstStable,       // least j whose partial substitution is stable
  FullSubstitution,  // always substitute ϖ ↦ [u] at every level
};

struct StableReduction {
  WittElem y;  // stable, y ≡ x mod π
  WittElem q;  // (x - y) / π
};

StableReduction stable_reduce(const WittElem& x, const CoeffElem& u,
                              ReduceStrategy strategy = ReduceStrategy::FirstStable);

/// λ over the stored digits only; the ϖ-truncation is accounted for once,
/// by the L·H(u,r)(ϖ) floor of the evaluation. Empty when x has no levels.
std::optional<NormExp> digit_lambda(const WittElem& x);

struct StablePresentation {
  CoeffElem center;
  std::vector<WittElem> entries;  // entries[i] is the stable x_i
  WittElem residual;              // x = sum_{i<depth} x_i π^i + residual π^depth
  int source_levels = 0;          // ϖ-levels of x; x is only known mod ϖ^source_levels
  /// digit_lambda of the residual after D steps, D = 0..depth. Each
  /// division by π costs t-precision, so a shallower tail can be the sharper
  /// bound.
  std::vector<std::optional<NormExp>> residual_norms;
  int depth() const { return static_cast<int>(entries.size()); }
};

/// depth < 0 means one level per known ϖ-level of x. Throws Precondition
/// "precision_exhausted" when x runs out of levels first.
StablePresentation stable_presentation(const WittElem& x, const CoeffElem& u, int depth = -1,
                                       ReduceStrategy strategy = ReduceStrategy::FirstStable);

/// Reassembles sum_i x_i π^i + residual π^depth.
WittElem reassemble(const StablePresentation& pres);

/// H(u, r)(x): exponent min_i (i(rho + 1) + λ(x_i)); for r = 0 only x_0.
NormExp eval_H(const CoeffElem& u, const Radius& r, const WittElem& x);
NormExp eval_H(const CoeffElem& u, const Radius& r, const RobbaElem& x);
/// Same evaluation on a presentation that has already been built.
NormExp eval_H(const StablePresentation& pres, const Radius& r);

enum class Sign { Plus, Minus };
std::string to_string(Sign sign);
Sign parse_sign(const std::string& text);

struct Beta5Value {
  GammaValue value = GammaValue::zero();
  /// Level attaining the maximum (for Witt inputs); -1 when not applicable.
  int level = -1;
  /// rho outside the value group: the point is the rank-1 point β_{u,r}.
  bool coincides_with_rank1 = false;
  /// Every level vanished at precision; value is 0 only up to `bound`.
  bool below = false;
  Rational bound{0};
};

/// β_{u, r^±}(x) with r = p^{-rho}, rho > 0.
Beta5Value eval_beta5(const CoeffElem& u, const Rational& rho, Sign sign, const WittElem& x);
Beta5Value eval_beta5(const CoeffElem& u, const Rational& rho, Sign sign, const RobbaElem& x);

}  // namespace robba
