#include "robba/finite_field.hpp"

#include "robba/error.hpp"
#include "robba/rational.hpp"

#include <algorithm>

namespace robba {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

// Remainder of a modulo b over F_p; b monic.
FpPoly poly_rem(FpPoly a, const FpPoly& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = mod(a[i], p);
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - c * b[j], p);
  }
  a.resize(std::max(0, db));
  return a;
}

bool is_zero_poly(const FpPoly& a) {
  for (int c : a) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(int p, const FpPoly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    // Enumerate monic divisors of degree k.
    std::int64_t count = ipow(p, static_cast<unsigned>(k));
    for (std::int64_t code = 0; code < count; ++code) {
      FpPoly g(k + 1, 0);
      auto c = code;
      for (int j = 0; j < k; ++j) {
        g[j] = static_cast<int>(c % p);
        c /= p;
      }
      g[k] = 1;
      if (is_zero_poly(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

FpPoly default_modulus(int p, int degree) {
  require(degree >= 1, "bad_field", "field degree must be positive");
  const std::int64_t count = ipow(p, static_cast<unsigned>(degree));
  for (std::int64_t code = 0; code < count; ++code) {
    FpPoly f(degree + 1, 0);
    auto c = code;
    for (int j = 0; j < degree; ++j) {
      f[j] = static_cast<int>(c % p);
      c /= p;
    }
    f[degree] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw_internal("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, FpPoly modulus) : p_(p), modulus_(std::move(modulus)) {
  require(is_prime(p), "bad_field", "characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus_) c = mod(c, p);
  while (modulus_.size() > 1 && modulus_.back() == 0) modulus_.pop_back();
  degree_ = static_cast<int>(modulus_.size()) - 1;
  require(degree_ >= 1 && modulus_.back() == 1, "bad_field", "modulus must be monic of degree >= 1");
  require(is_irreducible(p, modulus_), "bad_field", "modulus is not irreducible over F_p");
  const std::int64_t size = ipow(p, static_cast<unsigned>(degree_));
  require(size <= kMaxSize, "bad_field", "field too large for table arithmetic");
  size_ = static_cast<std::uint32_t>(size);
  pow_p_.resize(degree_ + 1);
  for (int j = 0; j <= degree_; ++j) pow_p_[j] = static_cast<std::uint32_t>(ipow(p, j));

  // Find a primitive element and build log/exp tables.
  const std::uint32_t order = size_ - 1;
  exp_.assign(order, 0);
  log_.assign(size_, 0);
  bool found = false;
  for (FqElem cand = 1; cand < size_ && !found; ++cand) {
    FqElem x = 1;
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < order; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[k] = x;
      x = poly_mul_slow(x, cand);
    }
    found = primitive && x == 1;
  }
  if (!found) throw_internal("no primitive element");
  for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k]] = k;
}

std::vector<int> FiniteField::digits(FqElem a) const {
  std::vector<int> out(degree_);
  for (int j = 0; j < degree_; ++j) {
    out[j] = static_cast<int>(a % p_);
    a /= p_;
  }
  return out;
}

FqElem FiniteField::from_digits(const std::vector<int>& digits) const {
  FqElem code = 0;
  for (int j = degree_ - 1; j >= 0; --j) {
    const int c = j < static_cast<int>(digits.size()) ? mod(digits[j], p_) : 0;
    code = code * p_ + c;
  }
  return code;
}

FqElem FiniteField::poly_mul_slow(FqElem a, FqElem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  FpPoly prod(2 * degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  return from_digits(poly_rem(prod, modulus_, p_));
}

FqElem FiniteField::generator_symbol() const {
  if (degree_ == 1) return from_int(-modulus_[0]);
  return static_cast<FqElem>(p_);
}

FqElem FiniteField::from_int(std::int64_t n) const {
  return static_cast<FqElem>(((n % p_) + p_) % p_);
}

FqElem FiniteField::add(FqElem a, FqElem b) const {
  if (p_ == 2) return a ^ b;
  FqElem out = 0;
  for (int j = 0; j < degree_; ++j) {
    const auto d = (a % p_ + b % p_) % p_;
    out += d * pow_p_[j];
    a /= p_;
    b /= p_;
  }
  return out;
}

FqElem FiniteField::neg(FqElem a) const {
  if (p_ == 2) return a;
  FqElem out = 0;
  for (int j = 0; j < degree_; ++j) {
    const auto d = (p_ - a % p_) % p_;
    out += d * pow_p_[j];
    a /= p_;
  }
  return out;
}

FqElem FiniteField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FiniteField::mul(FqElem a, FqElem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t order = size_ - 1;
  return exp_[(log_[a] + log_[b]) % order];
}

FqElem FiniteField::inv(FqElem a) const {
  if (a == 0) throw_precondition("division_by_zero", "inverse of zero in finite field");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

FqElem FiniteField::pow(FqElem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % order)) % order)];
}

FqElem FiniteField::frobenius(FqElem a, int k) const {
  k = ((k % degree_) + degree_) % degree_;
  return pow(a, static_cast<std::uint64_t>(ipow(p_, static_cast<unsigned>(k))));
}

FqElem FiniteField::frobenius_inverse(FqElem a, int k) const { return frobenius(a, -k); }

std::string FiniteField::to_string(FqElem a) const {
  if (a == 0) return "0";
  const auto ds = digits(a);
  std::string out;
  for (int j = degree_ - 1; j >= 0; --j) {
    if (ds[j] == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(ds[j]);
      continue;
    }
    if (ds[j] != 1) out += std::to_string(ds[j]) + "*";
    out += "g";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

}  // namespace robba
