#pragma once

#include "tgs/bigint.hpp"
#include "tgs/exactpoly.hpp"
#include "tgs/seqcore.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace tgs {

// Multiplicities of the distance eigenvalues -2 and -1. With blocks
// (a_1..a_B), B even: m(-2) = sum over odd positions of (a_i - 1),
// m(-1) = sum over even positions of (a_i - 1), plus one more when a_1 = 1.
struct Multiplicities {
  std::int64_t m_minus2 = 0;
  std::int64_t m_minus1 = 0;

  friend bool operator==(const Multiplicities& a, const Multiplicities& b) {
    return a.m_minus2 == b.m_minus2 && a.m_minus1 == b.m_minus1;
  }
};

enum class Method { formula, quotient, oracle };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct CharPolyResult {
  BlockSequence blocks;
  Multiplicities mult;
  IntPolynomial q_poly;     // monic, degree B
  IntPolynomial full_poly;  // monic, degree N
  Method method = Method::formula;
};

Multiplicities multiplicities(const BlockSequence& blocks);

// Exponents of the (x+2) and (x+1) factors in the full polynomial. These
// are the plain run sums without the a_1 = 1 bonus: that extra -1
// eigenvalue is a root of the degree-B factor and must not be counted
// twice.
std::pair<std::int64_t, std::int64_t> factor_exponents(const BlockSequence& blocks);

// B x B divisor-partition quotient of the distance matrix: off-diagonal
// entry (r, c) is a_c when max(r, c) is at an even 1-based position and
// 2 a_c otherwise; diagonal entry (r, r) is (a_r - 1) or 2 (a_r - 1) by the
// same parity rule.
IntMatrix quotient_matrix(const BlockSequence& blocks);

// Degree-B factor straight from the block lengths: with z = x + 2,
// y = x + 1 and the negated blocks fed to the three-term recurrence,
//   q = 2 y p_{B-1} - p_B.
// The sign pair in that combination was fixed against the division-free
// witness on every connected graph with N <= 8; B even makes the result
// monic as written. Single vertex: q = x.
IntPolynomial q_formula(const BlockSequence& blocks);

// Full distance characteristic polynomial (monic normalization of
// det(D - x I)) assembled as (x+2)^m2' (x+1)^m1' q, where q comes from the
// chosen route: the closed formula, the exact charpoly of the quotient
// matrix, or the division-free witness on the full N x N distance matrix.
CharPolyResult full_charpoly(const BlockSequence& blocks, Method method);

}  // namespace tgs
