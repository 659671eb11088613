// Universal addition and multiplication polynomials for p-typical Witt
// vectors in Witt coordinates, built once per (p, N) from the ghost
// recursion and shared read-only.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace robba {

class WittPolyTable {
 public:
  static constexpr int kMaxLevels = 5;
  /// Exponents of X_0..X_{N-1} followed by Y_0..Y_{N-1}.
  using Monomial = std::array<std::uint16_t, 2 * kMaxLevels>;
  /// Terms with coefficients in [1, p).
  using Poly = std::vector<std::pair<Monomial, std::int64_t>>;

  /// Cached per (p, N). Throws Precondition when N > kMaxLevels and Internal
  /// if the ghost-component check at build time fails.
  static std::shared_ptr<const WittPolyTable> get(int p, int levels);

  int p() const noexcept { return p_; }
  int levels() const noexcept { return levels_; }
  /// S_n mod p.
  const Poly& sum(int n) const { return sum_.at(n); }
  /// P_n mod p.
  const Poly& product(int n) const { return product_.at(n); }

 private:
  WittPolyTable(int p, int levels);

  int p_;
  int levels_;
  std::vector<Poly> sum_;
  std::vector<Poly> product_;
};

}  // namespace robba
