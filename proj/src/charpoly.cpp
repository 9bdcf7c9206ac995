#include "tgs/charpoly.hpp"

#include "tgs/gamma.hpp"
#include "tgs/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace tgs {

namespace {

bool is_single_vertex(const BlockSequence& blocks) {
  return blocks.n_blocks() == 1 && blocks.run(0) == 1;
}

void require_connected(const BlockSequence& blocks) {
  if (!is_connected(blocks))
    throw std::invalid_argument("characteristic polynomial requires a connected graph");
}

std::vector<std::int64_t> negated_runs(const BlockSequence& blocks, std::size_t count) {
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(-blocks.run(i));
  return out;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::formula: return "formula";
    case Method::quotient: return "quotient";
    case Method::oracle: return "oracle";
  }
  throw std::logic_error("unknown method");
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "formula") return Method::formula;
  if (name == "quotient") return Method::quotient;
  if (name == "oracle") return Method::oracle;
  return std::nullopt;
}

Multiplicities multiplicities(const BlockSequence& blocks) {
  require_connected(blocks);
  if (is_single_vertex(blocks)) return {0, 0};
  auto [m2, m1] = factor_exponents(blocks);
  if (blocks.run(0) == 1) ++m1;
  return {m2, m1};
}

std::pair<std::int64_t, std::int64_t> factor_exponents(const BlockSequence& blocks) {
  std::int64_t m2 = 0;
  std::int64_t m1 = 0;
  for (std::size_t i = 0; i < blocks.n_blocks(); ++i) {
    if (i % 2 == 0)
      m2 += blocks.run(i) - 1;
    else
      m1 += blocks.run(i) - 1;
  }
  return {m2, m1};
}

IntMatrix quotient_matrix(const BlockSequence& blocks) {
  require_connected(blocks);
  const auto b = static_cast<Eigen::Index>(blocks.n_blocks());
  IntMatrix q(b, b);
  for (Eigen::Index r = 0; r < b; ++r) {
    for (Eigen::Index c = 0; c < b; ++c) {
      // distance between the blocks: 1 when the later block holds
      // dominating vertices (even 1-based position), else 2
      const Eigen::Index later = r > c ? r : c;
      const std::int64_t d = later % 2 == 1 ? 1 : 2;
      const std::int64_t size = blocks.run(static_cast<std::size_t>(c));
      q(r, c) = r == c ? d * (size - 1) : d * size;
    }
  }
  return q;
}

IntPolynomial q_formula(const BlockSequence& blocks) {
  require_connected(blocks);
  if (is_single_vertex(blocks)) return IntPolynomial::x();
  const std::size_t b = blocks.n_blocks();
  const IntPolynomial z{2, 1};
  const IntPolynomial y{1, 1};
  const auto full = negated_runs(blocks, b);
  const auto head = negated_runs(blocks, b - 1);
  const IntPolynomial q =
      BigInt(2) * y * p_tridiag_recurrence(head, z, y) - p_tridiag_recurrence(full, z, y);
  if (q.leading() != BigInt(1)) throw std::logic_error("degree-B factor is not monic");
  return q;
}

CharPolyResult full_charpoly(const BlockSequence& blocks, Method method) {
  require_connected(blocks);
  const auto mult = multiplicities(blocks);
  if (is_single_vertex(blocks)) {
    return {blocks, mult, IntPolynomial::x(), IntPolynomial::x(), method};
  }
  const auto [m2, m1] = factor_exponents(blocks);

  IntPolynomial q;
  switch (method) {
    case Method::formula:
      q = q_formula(blocks);
      break;
    case Method::quotient:
      q = monic_canonical(charpoly_exact(quotient_matrix(blocks)));
      break;
    case Method::oracle: {
      IntPolynomial full = monic_canonical(charpoly_exact(distance_matrix(blocks)));
      q = full;
      for (std::int64_t i = 0; i < m2; ++i) q = divide_linear_exact(q, BigInt(-2));
      for (std::int64_t i = 0; i < m1; ++i) q = divide_linear_exact(q, BigInt(-1));
      return {blocks, mult, std::move(q), std::move(full), method};
    }
  }

  IntPolynomial full = q * pow(IntPolynomial{2, 1}, static_cast<std::size_t>(m2)) *
                       pow(IntPolynomial{1, 1}, static_cast<std::size_t>(m1));
  return {blocks, mult, std::move(q), std::move(full), method};
}

}  // namespace tgs
