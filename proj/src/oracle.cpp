#include "tgs/oracle.hpp"

#include "tgs/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tgs {

BigInt det_m_matrix(int n) {
  if (n < 1) throw std::invalid_argument("matrix order must be positive");
  IntMatrix m = IntMatrix::Zero(n, n);
  m(0, 0) = -1;
  for (int i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = 1;
    m(i + 1, i) = -1;
  }
  // det(M) is the constant term of det(M - x I)
  return charpoly_exact(m).coeff(0);
}

VerifyReport verify_graph(const BlockSequence& blocks) {
  VerifyReport report{blocks, false, std::nullopt, {}, false};
  const Method methods[] = {Method::formula, Method::quotient, Method::oracle};
  std::vector<CharPolyResult> results;
  results.reserve(3);
  for (Method m : methods) {
    results.push_back(full_charpoly(blocks, m));
    report.methods_compared.emplace_back(method_name(m));
  }

  bool polys_agree = true;
  std::size_t max_deg = 0;
  for (const auto& r : results)
    max_deg = std::max(max_deg, r.full_poly.degree().value_or(0));
  for (std::size_t d = 0; d <= max_deg && polys_agree; ++d) {
    for (const auto& r : results) {
      if (r.full_poly.coeff(d) != results[0].full_poly.coeff(d) ||
          r.q_poly.coeff(d) != results[0].q_poly.coeff(d)) {
        polys_agree = false;
        report.first_mismatch_degree = d;
        break;
      }
    }
  }

  const auto expected = multiplicities(blocks);
  const auto& witness = results[2].full_poly;
  report.multiplicities_ok =
      !witness.is_zero() &&
      root_multiplicity(witness, BigInt(-2)) == static_cast<std::size_t>(expected.m_minus2) &&
      root_multiplicity(witness, BigInt(-1)) == static_cast<std::size_t>(expected.m_minus1);

  report.pass = polys_agree && report.multiplicities_ok;
  return report;
}

}  // namespace tgs
