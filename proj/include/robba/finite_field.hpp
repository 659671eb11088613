// F_{p^d} as F_p[g]/(modulus). Elements are encoded base p: digit j of the
// code is the coefficient of g^j. Multiplication goes through log/exp tables
// built from a primitive element, so the field size is capped at 2^16.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace robba {

using FqElem = std::uint32_t;

/// Coefficients low to high over F_p, monic.
using FpPoly = std::vector<int>;

class FiniteField {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  /// Throws Precondition if p is not prime, the modulus is not monic or not
  /// irreducible over F_p, or the field is larger than kMaxSize.
  FiniteField(int p, FpPoly modulus);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  std::uint32_t size() const noexcept { return size_; }
  const FpPoly& modulus() const noexcept { return modulus_; }

  FqElem zero() const noexcept { return 0; }
  FqElem one() const noexcept { return 1; }
  /// The class of g itself (the adjoined root of the modulus).
  FqElem generator_symbol() const;
  /// n reduced mod p, as a prime-field element.
  FqElem from_int(std::int64_t n) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  /// a^(p^k).
  FqElem frobenius(FqElem a, int k) const;
  /// The unique b with b^(p^k) = a.
  FqElem frobenius_inverse(FqElem a, int k) const;

  /// Coefficients of a as a polynomial in g (length = degree).
  std::vector<int> digits(FqElem a) const;
  FqElem from_digits(const std::vector<int>& digits) const;

  /// "0", "1", "g", "g^2+g+1", ... (parsable back by the CLI grammar).
  std::string to_string(FqElem a) const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  FqElem poly_mul_slow(FqElem a, FqElem b) const;

  int p_;
  int degree_;
  std::uint32_t size_;
  FpPoly modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^j for j <= degree
  std::vector<FqElem> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::int64_t n);

/// Trial factorization over F_p by every monic polynomial of degree <= d/2.
bool is_irreducible(int p, const FpPoly& f);

/// The lexicographically first monic irreducible of the given degree; this is
/// the default modulus table used when a config does not supply one.
FpPoly default_modulus(int p, int degree);

}  // namespace robba
