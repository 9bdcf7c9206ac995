#include "tgs/exactpoly.hpp"

#include <doctest.h>

#include <random>

using tgs::BigInt;
using tgs::IntPolynomial;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial normalization") {
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(!IntPolynomial{}.degree().has_value());
  CHECK(IntPolynomial{5}.degree() == 0);
  CHECK(IntPolynomial{5, 0}.degree() == 0);
  CHECK(IntPolynomial::x().degree() == 1);
  CHECK(IntPolynomial{1, 2, 3}.coeff(7) == 0);
}

TEST_CASE("basic arithmetic") {
  const auto x = IntPolynomial::x();
  const auto p = (x + IntPolynomial::constant(1)) * (x - IntPolynomial::constant(1));
  CHECK(p == IntPolynomial{-1, 0, 1});
  CHECK(p.eval(3) == 8);
  CHECK((p - p).is_zero());
  CHECK((BigInt(2) * x) == IntPolynomial{0, 2});
  CHECK(-p == IntPolynomial{1, 0, -1});
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> point(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 6);
    const auto b = random_poly(rng, 6);
    const auto c = random_poly(rng, 6);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const BigInt v(point(rng));
    CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
    CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
  }
}

TEST_CASE("linear division and root multiplicity") {
  const auto x = IntPolynomial::x();
  const auto three = IntPolynomial::constant(3);
  const auto p = (x - three) * (x - three) * (x + IntPolynomial::constant(2));

  auto [q1, r1] = tgs::divide_linear(p, BigInt(3));
  CHECK(r1 == 0);
  CHECK(q1 == (x - three) * (x + IntPolynomial::constant(2)));

  auto [q2, r2] = tgs::divide_linear(p, BigInt(1));
  CHECK(r2 == p.eval(1));

  CHECK(tgs::root_multiplicity(p, BigInt(3)) == 2);
  CHECK(tgs::root_multiplicity(p, BigInt(-2)) == 1);
  CHECK(tgs::root_multiplicity(p, BigInt(5)) == 0);
  CHECK_THROWS_AS(tgs::root_multiplicity(IntPolynomial{}, BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(tgs::divide_linear_exact(p, BigInt(1)), std::logic_error);
  CHECK(tgs::divide_linear_exact(p, BigInt(3)) == q1);
}

TEST_CASE("division identity on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_poly(rng, 8);
    if (p.is_zero()) continue;
    const BigInt r(root(rng));
    auto [q, rem] = tgs::divide_linear(p, r);
    const auto rebuilt = q * (IntPolynomial::x() - IntPolynomial::constant(r)) +
                         IntPolynomial::constant(rem);
    CHECK(rebuilt == p);
  }
}

TEST_CASE("monic normalization") {
  CHECK(tgs::monic_canonical(IntPolynomial{-6, -20, -18, 2, -1}) ==
        IntPolynomial{6, 20, 18, -2, 1});
  CHECK(tgs::monic_canonical(IntPolynomial{3, 1}) == IntPolynomial{3, 1});
  CHECK_THROWS_AS(tgs::monic_canonical(IntPolynomial{1, 2}), std::logic_error);
  CHECK_THROWS_AS(tgs::monic_canonical(IntPolynomial{}), std::logic_error);
}

TEST_CASE("powers") {
  CHECK(tgs::pow(IntPolynomial{1, 1}, 0) == IntPolynomial::constant(1));
  CHECK(tgs::pow(IntPolynomial{1, 1}, 3) == IntPolynomial{1, 3, 3, 1});
}

TEST_CASE("text rendering") {
  CHECK(tgs::to_string(IntPolynomial{}) == "0");
  CHECK(tgs::to_string(IntPolynomial{7}) == "7");
  CHECK(tgs::to_string(IntPolynomial{-7}) == "-7");
  CHECK(tgs::to_string(IntPolynomial::x()) == "x");
  CHECK(tgs::to_string(IntPolynomial{0, 2}) == "2x");
  CHECK(tgs::to_string(IntPolynomial{1, -1}) == "-x + 1");
  CHECK(tgs::to_string(IntPolynomial{-6, -20, -18, -2, 1}) ==
        "x^4 - 2x^3 - 18x^2 - 20x - 6");
  CHECK(tgs::to_string(IntPolynomial{0, 0, -1, 0, 0, 0, 0, 0, 1}) == "x^8 - x^2");
}

TEST_CASE("decimal coefficient strings survive huge values") {
  const BigInt huge = tgs::bigint_from_decimal("123456789012345678901234567890");
  const IntPolynomial p{BigInt(-4), huge};
  const auto strs = tgs::coeff_strings(p);
  REQUIRE(strs.size() == 2);
  CHECK(strs[0] == "-4");
  CHECK(strs[1] == "123456789012345678901234567890");
  CHECK(tgs::bigint_from_decimal(strs[1]) == huge);
}
