#include "robba/tate.hpp"

#include <numeric>

namespace robba {

MonomialIndex::MonomialIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) require(e >= 0, "bad_index", "monomial exponents must be nonnegative");
}

MonomialIndex MonomialIndex::unit(int n, int i) {
  require(i >= 0 && i < n, "bad_index", "variable index out of range");
  std::vector<int> exps(n, 0);
  exps[i] = 1;
  return MonomialIndex(std::move(exps));
}

int MonomialIndex::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::string MonomialIndex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exps_[i]);
  }
  return out + ")";
}

namespace {

void check_dims(const MonomialIndex& a, const MonomialIndex& b) {
  if (a.size() != b.size()) {
    throw_precondition("dimension_mismatch", "indices " + a.to_string() + " and " + b.to_string() +
                                                 " have different lengths");
  }
}

// Number of compositions of d into k nonnegative parts.
BigInt compositions(int d, int k) {
  if (k == 0) return d == 0 ? 1 : 0;
  // binomial(d + k - 1, k - 1)
  BigInt out = 1;
  for (int i = 1; i < k; ++i) out = out * (d + i) / i;
  return out;
}

// Number of indices of total degree < d in n variables: binomial(d - 1 + n, n).
BigInt below_degree(int d, int n) {
  BigInt out = 1;
  for (int i = 1; i <= n; ++i) out = out * (d - 1 + i) / i;
  return out;
}

}  // namespace

bool componentwise_leq(const MonomialIndex& a, const MonomialIndex& b) {
  check_dims(a, b);
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::strong_ordering grlex_compare(const MonomialIndex& a, const MonomialIndex& b) {
  check_dims(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MonomialIndex operator+(const MonomialIndex& a, const MonomialIndex& b) {
  check_dims(a, b);
  std::vector<int> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return MonomialIndex(std::move(out));
}

MonomialIndex operator-(const MonomialIndex& a, const MonomialIndex& b) {
  require(componentwise_leq(b, a), "bad_index", b.to_string() + " does not divide " + a.to_string());
  std::vector<int> out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return MonomialIndex(std::move(out));
}

BigInt grlex_rank(const MonomialIndex& index) {
  const int n = index.size();
  int rem = index.degree();
  BigInt rank = rem == 0 ? BigInt(0) : below_degree(rem, n);
  for (int k = 0; k < n; ++k) {
    for (int v = 0; v < index[k]; ++v) rank += compositions(rem - v, n - k - 1);
    rem -= index[k];
  }
  return rank;
}

MonomialIndex grlex_unrank(int n, BigInt rank) {
  require(n >= 1 && rank >= 0, "bad_index", "rank must be nonnegative");
  int d = 0;
  while (below_degree(d + 1, n) <= rank) ++d;
  if (d > 0) rank -= below_degree(d, n);
  std::vector<int> exps(n, 0);
  int rem = d;
  for (int k = 0; k < n; ++k) {
    if (k == n - 1) {
      exps[k] = rem;
      break;
    }
    int v = 0;
    while (true) {
      const BigInt block = compositions(rem - v, n - k - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    exps[k] = v;
    rem -= v;
  }
  return MonomialIndex(std::move(exps));
}

}  // namespace robba
