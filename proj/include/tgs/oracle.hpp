#pragma once

#include "tgs/bigint.hpp"
#include "tgs/exactpoly.hpp"
#include "tgs/seqcore.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgs {

// Characteristic polynomial det(M - x I), exact and division-free
// (Samuelson-Berkowitz), so it works over the integers directly. The
// leading coefficient is (-1)^order. O(n^4) scalar multiplications.
template <typename Scalar>
Polynomial<Scalar> charpoly_exact(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const Eigen::Index n = m.rows();

  // c holds det(x I - M_r) for the leading r x r principal submatrix,
  // degree-descending and monic. Growing r appends one Toeplitz
  // convolution with the column t.
  std::vector<Scalar> c{Scalar(1)};
  std::vector<Scalar> t;
  for (Eigen::Index r = 1; r <= n; ++r) {
    t.assign(static_cast<std::size_t>(r) + 1, Scalar(0));
    t[0] = Scalar(1);
    t[1] = -m(r - 1, r - 1);
    if (r >= 2) {
      const auto row = m.block(r - 1, 0, 1, r - 1);
      Mat krylov = m.block(0, r - 1, r - 1, 1);
      t[2] = -(row * krylov)(0, 0);
      for (Eigen::Index k = 3; k <= r; ++k) {
        krylov = m.topLeftCorner(r - 1, r - 1) * krylov;
        t[static_cast<std::size_t>(k)] = -(row * krylov)(0, 0);
      }
    }
    std::vector<Scalar> next(static_cast<std::size_t>(r) + 1, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      const std::size_t jlo = i > static_cast<std::size_t>(r) ? i - static_cast<std::size_t>(r) : 0;
      const std::size_t jhi = i < c.size() - 1 ? i : c.size() - 1;
      for (std::size_t j = jlo; j <= jhi; ++j) next[i] += c[j] * t[i - j];
    }
    c = std::move(next);
  }

  // flip det(x I - M) into det(M - x I)
  std::vector<Scalar> ascending(c.size());
  for (std::size_t d = 0; d < c.size(); ++d) {
    const Scalar& v = c[c.size() - 1 - d];
    ascending[d] = n % 2 == 0 ? v : Scalar(-v);
  }
  return Polynomial<Scalar>(std::move(ascending));
}

// Determinant of the n x n matrix with -1 in the top-left corner, zeros on
// the rest of the diagonal, +1 on the superdiagonal and -1 on the
// subdiagonal. Structurally this is always (-1)^n; computed here through
// the same exact machinery so tests can pin that identity.
BigInt det_m_matrix(int n);

// Three-way comparison of the closed formula, the quotient-matrix route and
// the division-free witness, plus the eigenvalue multiplicity check.
struct VerifyReport {
  BlockSequence blocks;
  bool pass = false;
  std::optional<std::size_t> first_mismatch_degree;
  std::vector<std::string> methods_compared;
  bool multiplicities_ok = false;
};

VerifyReport verify_graph(const BlockSequence& blocks);

}  // namespace tgs
