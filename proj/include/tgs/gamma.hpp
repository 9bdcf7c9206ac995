#pragma once

#include "tgs/bigint.hpp"
#include "tgs/exactpoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tgs {

// Strictly increasing positions t_1 < ... < t_l in [1, n] with the parity
// constraint t_i == n + i - l (mod 2), so successive positions alternate
// parity and the last one matches n. Returned in lexicographic order.
// l = 0 yields the single empty sequence.
std::vector<std::vector<int>> enumerate_index_sequences(int n, int l);

// Sum over those position sequences of the product a_{t_1} * ... * a_{t_l}
// (a is 1-indexed by position, passed 0-indexed). Entries may be negative.
// l = 0 gives 1, l > n gives 0. Computed by DP in O(n*l) exact ops.
BigInt gamma_value(std::span<const std::int64_t> a, int l);

// All values for l = 0..n at once.
std::vector<BigInt> gamma_table(std::span<const std::int64_t> a);

// Weighted alternating sum of the gamma values in the indeterminates z, y:
// with n = 2m + r0 and r1 = 1 - r0,
//   p_n = z^r0 * sum_{k=0}^{m}    (-1)^(m-k) (zy)^k gamma_{n, n-2k-r0}
//       + z^r1 * sum_{k=0}^{m-r1} (-1)^(m-k) (zy)^k gamma_{n, n-2k-r1}.
IntPolynomial p_closed_form(std::span<const std::int64_t> a, const IntPolynomial& z,
                            const IntPolynomial& y);

// Same polynomial by the three-term determinant recurrence
//   D_0 = 1, D_1 = z + a_1, D_i = (-1)^(i+1) a_i D_{i-1} + z y D_{i-2}.
// Ground truth for p_closed_form; the two agree identically.
IntPolynomial p_tridiag_recurrence(std::span<const std::int64_t> a, const IntPolynomial& z,
                                   const IntPolynomial& y);

}  // namespace tgs
