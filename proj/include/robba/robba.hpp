// Dense elements of the extended Robba rings A_{L,E}, B_{L,E} and B^I_{L,E}
// at finite precision: finitely many digits sum_i ϖ^i [x̄_i], i possibly
// negative, known modulo ϖ^wprec.
#pragma once

#include "robba/witt.hpp"

#include <map>
#include <string>

namespace robba {

/// I = [s, r] with s = p^{-s_exp}, r = p^{-r_exp}.
struct IntervalExp {
  Rational s_exp;
  Rational r_exp;

  IntervalExp(Rational s, Rational r);
};

enum class RobbaKind { A, B };

class RobbaElem {
 public:
  using Digits = std::map<int, CoeffElem>;

  /// Digits at index >= wprec are dropped, as are zero digits carrying no
  /// precision loss.
  RobbaElem(RingPtr ctx, Digits digits, int wprec);

  static RobbaElem zero(const RingPtr& ctx);
  static RobbaElem one(const RingPtr& ctx);
  static RobbaElem varpi_power(const RingPtr& ctx, int k);
  /// [c] for any c in L.
  static RobbaElem teichmuller(const RingPtr& ctx, const CoeffElem& c);

  const RingPtr& ctx() const noexcept { return ctx_; }
  const Digits& digits() const noexcept { return digits_; }
  /// The digit at index i (zero when absent; throws beyond wprec).
  CoeffElem digit(int i) const;
  int wprec() const noexcept { return wprec_; }
  /// Least stored index, wprec when nothing is stored.
  int i_min() const noexcept;
  RobbaKind kind() const;
  /// Exponent of the t-power needed to make every digit integral (>= 0).
  Rational t_shift() const;

  std::string to_string() const;

 private:
  RingPtr ctx_;
  Digits digits_;
  int wprec_;
};

RobbaElem robba_from_witt(const WittElem& x);
/// Kind-A element as a Witt vector with levels wprec.
WittElem robba_to_witt(const RobbaElem& x);

/// x = ϖ^{-k} [t^{-m}] core with core in W(O_L), k >= 0 and m >= 0. The
/// core keeps at most N levels.
struct RobbaNormalForm {
  int k;
  Rational m;
  WittElem core;
};
RobbaNormalForm robba_normalize(const RobbaElem& x, int k, const Rational& m);
RobbaNormalForm robba_normalize(const RobbaElem& x);
RobbaElem robba_denormalize(const WittElem& core, int k, const Rational& m);

RobbaElem robba_add(const RobbaElem& x, const RobbaElem& y);
RobbaElem robba_neg(const RobbaElem& x);
RobbaElem robba_sub(const RobbaElem& x, const RobbaElem& y);
RobbaElem robba_mul(const RobbaElem& x, const RobbaElem& y);
RobbaElem robba_pow(const RobbaElem& x, unsigned n);

/// H(0, r) with r = p^{-rho}: exponent min_i (i(rho + 1) + e(x̄_i)).
/// Throws Precondition "divergent" when rho + 1 < 0.
NormExp h0r_norm(const RobbaElem& x, const Rational& rho);

/// λ_I = max(H(0, s), H(0, r)).
NormExp lambdaI_norm(const RobbaElem& x, const IntervalExp& interval);

inline RobbaElem operator+(const RobbaElem& a, const RobbaElem& b) { return robba_add(a, b); }
inline RobbaElem operator-(const RobbaElem& a, const RobbaElem& b) { return robba_sub(a, b); }
inline RobbaElem operator-(const RobbaElem& a) { return robba_neg(a); }
inline RobbaElem operator*(const RobbaElem& a, const RobbaElem& b) { return robba_mul(a, b); }

}  // namespace robba
