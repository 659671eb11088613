// Weighted Tate algebras A{T_1/rho_1, ..., T_n/rho_n} over a coefficient
// domain, with the graded lexicographic term order.
#pragma once

#include "robba/error.hpp"
#include "robba/tate_domains.hpp"

#include <compare>
#include <map>
#include <memory>
#include <vector>

namespace robba {

// ---------------------------------------------------------------- indices

class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<int> exponents);
  static MonomialIndex zero(int n) { return MonomialIndex(std::vector<int>(n, 0)); }
  /// The index of T_i (0-based i).
  static MonomialIndex unit(int n, int i);

  int size() const noexcept { return static_cast<int>(exps_.size()); }
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() == 0; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int operator[](int i) const { return exps_.at(i); }

  std::string to_string() const;

  friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;

 private:
  std::vector<int> exps_;
};

/// Componentwise order: I <= J iff i_k <= j_k for every k.
bool componentwise_leq(const MonomialIndex& a, const MonomialIndex& b);
/// Graded lexicographic order. Throws Precondition on dimension mismatch.
std::strong_ordering grlex_compare(const MonomialIndex& a, const MonomialIndex& b);
MonomialIndex operator+(const MonomialIndex& a, const MonomialIndex& b);
/// Requires b <= a componentwise.
MonomialIndex operator-(const MonomialIndex& a, const MonomialIndex& b);
/// Number of J with J strictly before I in graded lexicographic order.
BigInt grlex_rank(const MonomialIndex& index);
/// Inverse of grlex_rank for n variables.
MonomialIndex grlex_unrank(int n, BigInt rank);

struct GrlexLess {
  bool operator()(const MonomialIndex& a, const MonomialIndex& b) const { return grlex_compare(a, b) < 0; }
};

// ---------------------------------------------------------------- ring

/// Variables with |T_i| = p^{-weights[i]}. Each weight must lie in
/// (1/N) times the domain's value group for N <= max_denominator.
template <CoeffDomain D>
class TateRing {
 public:
  static std::shared_ptr<const TateRing> create(D domain, std::vector<Rational> weights, Rational default_prec,
                                                std::int64_t max_denominator = 64) {
    require(!weights.empty(), "bad_config", "Tate algebra needs at least one variable");
    require(default_prec > 0, "bad_config", "Tate precision must be positive");
    for (const auto& w : weights) {
      const auto ratio = w / domain.value_group_generator();
      if (ratio.denominator() > max_denominator) {
        throw_precondition("value_group", "weight " + robba::to_string(w) +
                                              " generates an infinite-index extension of the value group");
      }
    }
    return std::shared_ptr<const TateRing>(new TateRing(std::move(domain), std::move(weights), default_prec));
  }

  const D& domain() const noexcept { return domain_; }
  int n() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& default_prec() const noexcept { return default_prec_; }

  /// Norm exponent of T^I.
  Rational weight(const MonomialIndex& index) const {
    require(index.size() == n(), "dimension_mismatch", "index " + index.to_string() + " has the wrong length");
    Rational out(0);
    for (int i = 0; i < n(); ++i) out += weights_[i] * index[i];
    return out;
  }

  /// Every weight is in the value group itself.
  bool weights_in_value_group() const {
    for (const auto& w : weights_) {
      if (!in_value_group(domain_, w)) return false;
    }
    return true;
  }

 private:
  TateRing(D domain, std::vector<Rational> weights, Rational prec)
      : domain_(std::move(domain)), weights_(std::move(weights)), default_prec_(prec) {}

  D domain_;
  std::vector<Rational> weights_;
  Rational default_prec_;
};

// ---------------------------------------------------------------- elements

/// Finite sum of x_I T^I known modulo terms of weighted norm <= p^{-prec}.
template <CoeffDomain D>
class TatePoly {
 public:
  using Elem = typename D::Elem;
  using Ring = std::shared_ptr<const TateRing<D>>;
  using Terms = std::map<MonomialIndex, Elem, GrlexLess>;

  TatePoly(Ring ring, Terms terms, Rational prec) : ring_(std::move(ring)), prec_(prec) {
    for (auto& [index, c] : terms) add_term(index, std::move(c));
  }

  static TatePoly zero(Ring ring) {
    auto prec = ring->default_prec();
    return TatePoly(std::move(ring), {}, prec);
  }
  static TatePoly zero(Ring ring, Rational prec) { return TatePoly(std::move(ring), {}, prec); }
  static TatePoly constant(Ring ring, Elem c) {
    const int n = ring->n();
    return monomial(std::move(ring), std::move(c), MonomialIndex::zero(n));
  }
  static TatePoly monomial(Ring ring, Elem c, MonomialIndex index) {
    auto prec = ring->default_prec();
    Terms terms;
    terms.emplace(std::move(index), std::move(c));
    return TatePoly(std::move(ring), std::move(terms), prec);
  }
  /// T_i with coefficient 1.
  static TatePoly variable(Ring ring, int i) {
    const int n = ring->n();
    auto one = ring->domain().one();
    return monomial(std::move(ring), std::move(one), MonomialIndex::unit(n, i));
  }

  const Ring& ring() const noexcept { return ring_; }
  const D& domain() const noexcept { return ring_->domain(); }
  const Terms& terms() const noexcept { return terms_; }
  const Rational& prec() const noexcept { return prec_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Norm exponent of x_I T^I.
  Rational term_norm(const MonomialIndex& index, const Elem& c) const {
    return domain().norm(c).exponent() + ring_->weight(index);
  }

  /// Weighted Gauss norm max_I |x_I| |T^I|.
  NormExp gauss_norm() const {
    if (terms_.empty()) return NormExp::below(prec_);
    Rational best = prec_;
    for (const auto& [index, c] : terms_) best = std::min(best, term_norm(index, c));
    return NormExp::exact(best);
  }

  Elem coefficient(const MonomialIndex& index) const {
    auto it = terms_.find(index);
    if (it != terms_.end()) return it->second;
    return domain().zero(prec_ - ring_->weight(index));
  }

  TatePoly truncated(const Rational& prec) const {
    if (prec >= prec_) return *this;
    return TatePoly(ring_, terms_, prec);
  }

  std::string to_string() const {
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + domain().to_string(it->second) + ")";
      if (!it->first.is_zero()) out += "*T" + it->first.to_string();
    }
    if (!out.empty()) out += " + ";
    return out + "O(p^-" + robba::to_string(prec_) + ")";
  }

 private:
  void add_term(const MonomialIndex& index, Elem c) {
    const Rational w = ring_->weight(index);
    c = domain().truncate(c, prec_ - w);
    if (domain().is_zero(c)) return;
    if (domain().norm(c).exponent() + w >= prec_) return;
    terms_.insert_or_assign(index, std::move(c));
  }

  Ring ring_;
  Terms terms_;
  Rational prec_;
};

namespace tate_detail {

template <CoeffDomain D>
void check_same_ring(const TatePoly<D>& x, const TatePoly<D>& y) {
  if (x.ring() != y.ring()) throw_precondition("config_mismatch", "Tate elements come from different rings");
}

template <CoeffDomain D>
Rational precision_of(const TatePoly<D>& x, const MonomialIndex& index, const typename D::Elem& c) {
  return x.domain().precision(c) + x.ring()->weight(index);
}

/// Norm exponent, or the precision when zero at precision.
template <CoeffDomain D>
Rational norm_value(const TatePoly<D>& x) {
  return x.gauss_norm().value();
}

}  // namespace tate_detail

template <CoeffDomain D>
TatePoly<D> tate_add(const TatePoly<D>& x, const TatePoly<D>& y) {
  tate_detail::check_same_ring(x, y);
  const auto& d = x.domain();
  Rational prec = std::min(x.prec(), y.prec());
  auto terms = x.terms();
  for (const auto& [index, c] : y.terms()) {
    auto [it, inserted] = terms.emplace(index, c);
    if (!inserted) it->second = d.add(it->second, c);
  }
  for (const auto& [index, c] : terms) prec = std::min(prec, tate_detail::precision_of(x, index, c));
  return TatePoly<D>(x.ring(), std::move(terms), prec);
}

template <CoeffDomain D>
TatePoly<D> tate_neg(const TatePoly<D>& x) {
  typename TatePoly<D>::Terms terms;
  for (const auto& [index, c] : x.terms()) terms.emplace(index, x.domain().neg(c));
  return TatePoly<D>(x.ring(), std::move(terms), x.prec());
}

template <CoeffDomain D>
TatePoly<D> tate_sub(const TatePoly<D>& x, const TatePoly<D>& y) {
  return tate_add(x, tate_neg(y));
}

template <CoeffDomain D>
TatePoly<D> tate_mul(const TatePoly<D>& x, const TatePoly<D>& y) {
  tate_detail::check_same_ring(x, y);
  const auto& d = x.domain();
  Rational prec = std::min(x.prec() + tate_detail::norm_value(y), y.prec() + tate_detail::norm_value(x));
  typename TatePoly<D>::Terms terms;
  for (const auto& [ix, cx] : x.terms()) {
    for (const auto& [iy, cy] : y.terms()) {
      auto index = ix + iy;
      if (x.term_norm(ix, cx) + y.term_norm(iy, cy) >= prec) continue;
      auto c = d.mul(cx, cy);
      auto [it, inserted] = terms.emplace(std::move(index), c);
      if (!inserted) it->second = d.add(it->second, c);
    }
  }
  for (const auto& [index, c] : terms) prec = std::min(prec, tate_detail::precision_of(x, index, c));
  return TatePoly<D>(x.ring(), std::move(terms), prec);
}

/// c * T^shift * x, exact in the shift.
template <CoeffDomain D>
TatePoly<D> tate_mul_term(const TatePoly<D>& x, const typename D::Elem& c, const MonomialIndex& shift) {
  const auto& d = x.domain();
  const Rational w = x.ring()->weight(shift);
  const Rational c_norm = d.norm(c).value();
  Rational prec = std::min(x.prec() + c_norm, d.precision(c) + tate_detail::norm_value(x)) + w;
  typename TatePoly<D>::Terms terms;
  for (const auto& [index, a] : x.terms()) {
    auto prod = d.mul(a, c);
    prec = std::min(prec, d.precision(prod) + x.ring()->weight(index) + w);
    terms.emplace(index + shift, std::move(prod));
  }
  return TatePoly<D>(x.ring(), std::move(terms), prec);
}

/// c * x.
template <CoeffDomain D>
TatePoly<D> tate_scale(const TatePoly<D>& x, const typename D::Elem& c) {
  return tate_mul_term(x, c, MonomialIndex::zero(x.ring()->n()));
}

template <CoeffDomain D>
TatePoly<D> operator+(const TatePoly<D>& a, const TatePoly<D>& b) { return tate_add(a, b); }
template <CoeffDomain D>
TatePoly<D> operator-(const TatePoly<D>& a, const TatePoly<D>& b) { return tate_sub(a, b); }
template <CoeffDomain D>
TatePoly<D> operator-(const TatePoly<D>& a) { return tate_neg(a); }
template <CoeffDomain D>
TatePoly<D> operator*(const TatePoly<D>& a, const TatePoly<D>& b) { return tate_mul(a, b); }

template <CoeffDomain D>
struct LeadingData {
  MonomialIndex index;
  typename D::Elem coefficient;
  /// Norm exponent of coefficient * T^index, equal to the Gauss norm.
  Rational norm;
};

/// The grlex-maximal index among the terms attaining the Gauss norm.
template <CoeffDomain D>
LeadingData<D> leading_data(const TatePoly<D>& x) {
  if (x.is_zero()) {
    throw_precondition("zero_at_precision", "leading data of an element that is zero at precision");
  }
  const Rational norm = x.gauss_norm().value();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    if (x.term_norm(it->first, it->second) == norm) return {it->first, it->second, norm};
  }
  throw_internal("no term attains the Gauss norm");
}

/// psi: x minus its constant term.
template <CoeffDomain D>
TatePoly<D> nonconstant_projection(const TatePoly<D>& x) {
  auto terms = x.terms();
  terms.erase(MonomialIndex::zero(x.ring()->n()));
  return TatePoly<D>(x.ring(), std::move(terms), x.prec());
}

/// x - y vanishes at the common precision.
template <CoeffDomain D>
bool equal_at_precision(const TatePoly<D>& x, const TatePoly<D>& y) {
  return tate_sub(x, y).is_zero();
}

}  // namespace robba
