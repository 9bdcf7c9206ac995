#include "tgs/gamma.hpp"

#include <stdexcept>

namespace tgs {

namespace {

void collect(int n, int l, int slot, int from, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (slot > l) {
    out.push_back(cur);
    return;
  }
  const int want = (n + slot - l) & 1;
  for (int t = from; t <= n - (l - slot); ++t) {
    if ((t & 1) != want) continue;
    cur.push_back(t);
    collect(n, l, slot + 1, t + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_index_sequences(int n, int l) {
  if (n < 0 || l < 0) throw std::invalid_argument("index sequence bounds must be nonnegative");
  std::vector<std::vector<int>> out;
  if (l > n) return out;
  std::vector<int> cur;
  cur.reserve(static_cast<std::size_t>(l));
  collect(n, l, 1, 1, cur, out);
  return out;
}

BigInt gamma_value(std::span<const std::int64_t> a, int l) {
  const int n = static_cast<int>(a.size());
  if (l < 0) throw std::invalid_argument("gamma order must be nonnegative");
  if (l == 0) return 1;
  if (l > n) return 0;
  // g[j] = gamma over the first p positions using j of them
  std::vector<BigInt> g(static_cast<std::size_t>(l) + 1);
  g[0] = 1;
  for (int p = 1; p <= n; ++p) {
    const int top = p < l ? p : l;
    for (int j = top; j >= 1; --j) {
      if (((n + j - l) & 1) != (p & 1)) continue;
      g[j] += a[static_cast<std::size_t>(p - 1)] * g[j - 1];
    }
  }
  return g[static_cast<std::size_t>(l)];
}

std::vector<BigInt> gamma_table(std::span<const std::int64_t> a) {
  std::vector<BigInt> out;
  out.reserve(a.size() + 1);
  for (int l = 0; l <= static_cast<int>(a.size()); ++l) out.push_back(gamma_value(a, l));
  return out;
}

IntPolynomial p_closed_form(std::span<const std::int64_t> a, const IntPolynomial& z,
                            const IntPolynomial& y) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("empty sequence");
  const int m = n / 2;
  const int r0 = n % 2;
  const int r1 = 1 - r0;
  const auto gamma = gamma_table(a);
  const IntPolynomial zy = z * y;

  const auto partial = [&](int r, int kmax) {
    IntPolynomial sum;
    IntPolynomial zy_pow = IntPolynomial::constant(1);
    for (int k = 0; k <= kmax; ++k) {
      const auto& g = gamma[static_cast<std::size_t>(n - 2 * k - r)];
      const BigInt w = (m - k) % 2 == 0 ? g : BigInt(-g);
      sum = sum + zy_pow * w;
      if (k < kmax) zy_pow = zy_pow * zy;
    }
    return r == 0 ? sum : z * sum;
  };

  return partial(r0, m) + partial(r1, m - r1);
}

IntPolynomial p_tridiag_recurrence(std::span<const std::int64_t> a, const IntPolynomial& z,
                                   const IntPolynomial& y) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("empty sequence");
  const IntPolynomial zy = z * y;
  IntPolynomial prev2 = IntPolynomial::constant(1);        // D_0
  IntPolynomial prev1 = z + IntPolynomial::constant(a[0]);  // D_1
  if (n == 1) return prev1;
  for (int i = 2; i <= n; ++i) {
    const BigInt coef = i % 2 == 1 ? BigInt(a[static_cast<std::size_t>(i - 1)])
                                   : BigInt(-a[static_cast<std::size_t>(i - 1)]);
    IntPolynomial cur = prev1 * coef + zy * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

}  // namespace tgs
