// Truncated generalized Witt vectors W(O_L)_E mod ϖ^N. An element is a list
// of Teichmüller digits x̄_0, ..., x̄_{L-1} (L <= N levels known) standing for
// sum_i ϖ^i [x̄_i] + O(ϖ^L).
#pragma once

#include "robba/coeff_field.hpp"
#include "robba/witt_poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace robba {

enum class EMode { EqualChar, MixedCharPTypical };

std::string to_string(EMode mode);
EMode parse_emode(const std::string& text);

struct RingConfig {
  FieldConfig field;
  EMode e_mode = EMode::EqualChar;
  int wprec = 6;
};

class RingContext {
 public:
  /// Mixed characteristic needs q = p and N <= 5.
  static std::shared_ptr<const RingContext> create(RingConfig config);

  const RingConfig& config() const noexcept { return config_; }
  const FieldPtr& field() const noexcept { return field_; }
  EMode mode() const noexcept { return config_.e_mode; }
  bool equal_char() const noexcept { return config_.e_mode == EMode::EqualChar; }
  int wprec() const noexcept { return config_.wprec; }
  int p() const noexcept { return field_->p(); }
  /// Only for the mixed backend.
  const WittPolyTable& table() const;

  bool operator==(const RingContext& other) const {
    return *field_ == *other.field_ && config_.e_mode == other.config_.e_mode && config_.wprec == other.config_.wprec;
  }

 private:
  RingContext(RingConfig config, FieldPtr field, std::shared_ptr<const WittPolyTable> table)
      : config_(std::move(config)), field_(std::move(field)), table_(std::move(table)) {}

  RingConfig config_;
  FieldPtr field_;
  std::shared_ptr<const WittPolyTable> table_;
};

using RingPtr = std::shared_ptr<const RingContext>;

class WittElem {
 public:
  /// Digits beyond wprec are dropped; every digit must lie in O_L.
  WittElem(RingPtr ctx, std::vector<CoeffElem> digits);

  static WittElem zero(const RingPtr& ctx);
  static WittElem one(const RingPtr& ctx);
  static WittElem teichmuller(const RingPtr& ctx, const CoeffElem& x);
  /// ϖ^k, k >= 0.
  static WittElem varpi_power(const RingPtr& ctx, int k);
  static WittElem from_int(const RingPtr& ctx, std::int64_t n);

  const RingPtr& ctx() const noexcept { return ctx_; }
  const std::vector<CoeffElem>& digits() const noexcept { return digits_; }
  const CoeffElem& digit(int i) const { return digits_.at(static_cast<std::size_t>(i)); }
  /// Number of known levels (the element is known mod ϖ^levels).
  int levels() const noexcept { return static_cast<int>(digits_.size()); }

  /// Keeps the first `levels` digits.
  WittElem truncated(int levels) const;

  std::string to_string() const;

  friend bool operator==(const WittElem& a, const WittElem& b) { return a.digits_ == b.digits_; }

 private:
  RingPtr ctx_;
  std::vector<CoeffElem> digits_;
};

void check_same_ring(const WittElem& x, const WittElem& y);

WittElem witt_add(const WittElem& x, const WittElem& y);
WittElem witt_neg(const WittElem& x);
WittElem witt_sub(const WittElem& x, const WittElem& y);
WittElem witt_mul(const WittElem& x, const WittElem& y);
WittElem witt_pow(const WittElem& x, unsigned n);
/// ϖ^k · x, keeping at most N levels.
WittElem witt_shift(const WittElem& x, int k);
/// x / ϖ for x with vanishing digit 0; one level is lost.
WittElem witt_shift_down(const WittElem& x);
/// [c]·x; digitwise multiplication by c in both backends.
WittElem teich_scale(const CoeffElem& c, const WittElem& x);

/// Gauss norm: exponent min_i (i + e(x̄_i)).
NormExp lambda_norm(const WittElem& x);

/// |x̄_0| > p^{-i}|x̄_i| for every known i > 0, or every digit zero at precision.
/// Throws Indeterminate when precision does not decide the inequality.
bool is_stable(const WittElem& x);

/// Exact quotient by ϖ - [u], |u| <= p^{-1}. The quotient keeps the levels
/// of x (one fewer when u = 0) and loses t-precision to the divisions by u.
/// Throws Precondition "not_divisible" when a quotient digit is not in O_L.
WittElem div_by_linear(const WittElem& x, const CoeffElem& u);

inline WittElem operator+(const WittElem& a, const WittElem& b) { return witt_add(a, b); }
inline WittElem operator-(const WittElem& a, const WittElem& b) { return witt_sub(a, b); }
inline WittElem operator-(const WittElem& a) { return witt_neg(a); }
inline WittElem operator*(const WittElem& a, const WittElem& b) { return witt_mul(a, b); }

}  // namespace robba
