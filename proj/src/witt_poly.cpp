#include "robba/witt_poly.hpp"

#include "robba/error.hpp"
#include "robba/rational.hpp"

#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

namespace robba {

namespace {

using Monomial = WittPolyTable::Monomial;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

using IntPoly = std::unordered_map<Monomial, std::int64_t, MonomialHash>;

std::int64_t reduce(std::int64_t a, std::int64_t modulus) {
  a %= modulus;
  return a < 0 ? a + modulus : a;
}

void add_term(IntPoly& poly, const Monomial& mono, std::int64_t c, std::int64_t modulus) {
  auto& slot = poly[mono];
  slot = reduce(slot + c, modulus);
  if (slot == 0) poly.erase(mono);
}

IntPoly mul(const IntPoly& a, const IntPoly& b, std::int64_t modulus) {
  IntPoly out;
  out.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = static_cast<std::uint16_t>(ma[v] + mb[v]);
      auto& slot = out[m];
      slot = reduce(slot + reduce(ca * cb, modulus), modulus);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntPoly power(const IntPoly& a, std::int64_t e, std::int64_t modulus) {
  IntPoly result;
  result[Monomial{}] = 1;
  IntPoly base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base, modulus);
    e >>= 1;
    if (e > 0) base = mul(base, base, modulus);
  }
  return result;
}

// w_n over the variables starting at `offset`.
IntPoly ghost(int p, int n, int offset, std::int64_t modulus) {
  IntPoly out;
  for (int i = 0; i <= n; ++i) {
    Monomial m{};
    m[offset + i] = static_cast<std::uint16_t>(ipow(p, n - i));
    add_term(out, m, ipow(p, i), modulus);
  }
  return out;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t modulus) {
  __int128 result = 1, base = reduce(b, modulus);
  while (e > 0) {
    if (e & 1) result = result * base % modulus;
    base = base * base % modulus;
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t evaluate(const IntPoly& poly, const std::vector<std::int64_t>& vars, std::int64_t modulus) {
  __int128 total = 0;
  for (const auto& [m, c] : poly) {
    __int128 term = c;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (m[v] != 0) term = term * powmod(vars[v], m[v], modulus) % modulus;
    }
    total = (total + term) % modulus;
  }
  return static_cast<std::int64_t>(total);
}

// Solves the ghost recursion for the polynomials whose ghost components are
// `combine(w_n(X), w_n(Y))`. Entry n is returned mod p^(N-n).
template <class Combine>
std::vector<IntPoly> solve_ghost(int p, int levels, Combine combine) {
  const std::int64_t full = ipow(p, levels);
  std::vector<IntPoly> out;
  for (int n = 0; n < levels; ++n) {
    IntPoly target = combine(ghost(p, n, 0, full), ghost(p, n, WittPolyTable::kMaxLevels, full), full);
    for (int i = 0; i < n; ++i) {
      const auto lifted = power(out[i], ipow(p, n - i), full);
      const std::int64_t scale = ipow(p, i);
      for (const auto& [m, c] : lifted) add_term(target, m, -scale * c, full);
    }
    const std::int64_t divisor = ipow(p, n);
    const std::int64_t modulus = ipow(p, levels - n);
    IntPoly quotient;
    for (const auto& [m, c] : target) {
      if (c % divisor != 0) throw_internal("ghost recursion produced a non-integral Witt polynomial");
      add_term(quotient, m, c / divisor, modulus);
    }
    out.push_back(std::move(quotient));
  }
  return out;
}

// Checks sum_{i<=n} p^i Z_i^(p^(n-i)) == combine(ghost values) mod p^N on
// random integer inputs.
template <class Combine>
void verify_ghost(int p, int levels, const std::vector<IntPoly>& polys, Combine combine) {
  const std::int64_t full = ipow(p, levels);
  std::mt19937_64 rng(0x5eed + p * 31 + levels);
  std::uniform_int_distribution<std::int64_t> dist(0, full - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> vars(2 * WittPolyTable::kMaxLevels, 0);
    for (int i = 0; i < levels; ++i) {
      vars[i] = dist(rng);
      vars[WittPolyTable::kMaxLevels + i] = dist(rng);
    }
    std::vector<std::int64_t> z;
    for (const auto& poly : polys) z.push_back(evaluate(poly, vars, full));
    for (int n = 0; n < levels; ++n) {
      __int128 gx = 0, gy = 0, gz = 0;
      for (int i = 0; i <= n; ++i) {
        const std::int64_t e = ipow(p, n - i);
        gx = (gx + ipow(p, i) * static_cast<__int128>(powmod(vars[i], e, full))) % full;
        gy = (gy + ipow(p, i) * static_cast<__int128>(powmod(vars[WittPolyTable::kMaxLevels + i], e, full))) % full;
        gz = (gz + ipow(p, i) * static_cast<__int128>(powmod(z[i], e, full))) % full;
      }
      const auto expected = combine(static_cast<std::int64_t>(gx), static_cast<std::int64_t>(gy), full);
      if (reduce(static_cast<std::int64_t>(gz), full) != expected) {
        throw_internal("Witt polynomial table fails the ghost-component check");
      }
    }
  }
}

WittPolyTable::Poly mod_p(const IntPoly& poly, int p) {
  std::map<Monomial, std::int64_t> sorted;
  for (const auto& [m, c] : poly) {
    if (c % p != 0) sorted.emplace(m, c % p);
  }
  return {sorted.begin(), sorted.end()};
}

}  // namespace

WittPolyTable::WittPolyTable(int p, int levels) : p_(p), levels_(levels) {
  auto add_polys = [](const IntPoly& a, const IntPoly& b, std::int64_t modulus) {
    IntPoly out = a;
    for (const auto& [m, c] : b) add_term(out, m, c, modulus);
    return out;
  };
  auto mul_polys = [](const IntPoly& a, const IntPoly& b, std::int64_t modulus) { return mul(a, b, modulus); };
  const auto sums = solve_ghost(p, levels, add_polys);
  const auto products = solve_ghost(p, levels, mul_polys);
  verify_ghost(p, levels, sums, [](std::int64_t a, std::int64_t b, std::int64_t m) { return reduce(a + b, m); });
  verify_ghost(p, levels, products, [](std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
  });
  for (const auto& s : sums) sum_.push_back(mod_p(s, p));
  for (const auto& s : products) product_.push_back(mod_p(s, p));
}

std::shared_ptr<const WittPolyTable> WittPolyTable::get(int p, int levels) {
  require(levels >= 1 && levels <= kMaxLevels, "bad_config",
          "mixed-characteristic backend supports 1 <= N <= " + std::to_string(kMaxLevels));
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const WittPolyTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, levels}];
  if (!slot) slot = std::shared_ptr<const WittPolyTable>(new WittPolyTable(p, levels));
  return slot;
}

}  // namespace robba
