#include "tgs/gamma.hpp"

#include <doctest.h>

#include <random>

using tgs::BigInt;
using tgs::IntPolynomial;

namespace {

std::vector<std::int64_t> random_signed(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> value(-6, 6);
  std::vector<std::int64_t> a(static_cast<std::size_t>(n));
  for (auto& v : a) v = value(rng);
  return a;
}

// direct translation of the definition, no DP
BigInt gamma_by_enumeration(const std::vector<std::int64_t>& a, int l) {
  BigInt total = 0;
  for (const auto& seq : tgs::enumerate_index_sequences(static_cast<int>(a.size()), l)) {
    BigInt prod = 1;
    for (int t : seq) prod *= a[static_cast<std::size_t>(t - 1)];
    total += prod;
  }
  return l == 0 ? BigInt(1) : total;
}

}  // namespace

TEST_CASE("index sequences match the printed examples") {
  const std::vector<std::vector<int>> i74 = {
      {2, 3, 4, 5}, {2, 3, 4, 7}, {2, 3, 6, 7}, {2, 5, 6, 7}, {4, 5, 6, 7}};
  const std::vector<std::vector<int>> i64 = {
      {1, 2, 3, 4}, {1, 2, 3, 6}, {1, 2, 5, 6}, {1, 4, 5, 6}, {3, 4, 5, 6}};
  CHECK(tgs::enumerate_index_sequences(7, 4) == i74);
  CHECK(tgs::enumerate_index_sequences(6, 4) == i64);
}

TEST_CASE("index sequence structure") {
  CHECK(tgs::enumerate_index_sequences(4, 0) == std::vector<std::vector<int>>{{}});
  CHECK(tgs::enumerate_index_sequences(3, 5).empty());
  CHECK_THROWS_AS(tgs::enumerate_index_sequences(4, -1), std::invalid_argument);

  for (int n = 0; n <= 9; ++n) {
    for (int l = 0; l <= n; ++l) {
      auto seqs = tgs::enumerate_index_sequences(n, l);
      auto sorted = seqs;
      std::sort(sorted.begin(), sorted.end());
      CHECK(seqs == sorted);  // lexicographic emission
      for (const auto& t : seqs) {
        REQUIRE(static_cast<int>(t.size()) == l);
        for (int i = 1; i <= l; ++i) {
          CHECK(t[static_cast<std::size_t>(i - 1)] >= 1);
          CHECK(t[static_cast<std::size_t>(i - 1)] <= n);
          if (i > 1) CHECK(t[static_cast<std::size_t>(i - 1)] > t[static_cast<std::size_t>(i - 2)]);
          CHECK((t[static_cast<std::size_t>(i - 1)] - (n + i - l)) % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("gamma fixtures") {
  const std::vector<std::int64_t> a{3, 4, 1, 2};
  CHECK(tgs::gamma_value(a, 0) == 1);
  CHECK(tgs::gamma_value(a, 2) == 20);
  CHECK(tgs::gamma_value(a, 5) == 0);
  CHECK_THROWS_AS(tgs::gamma_value(a, -1), std::invalid_argument);

  // blocks (3,2,2,1): gamma_1 = a2 + a4, gamma_2 = a1 a2 + a1 a4 + a3 a4,
  // gamma_3 = a2 a3 a4, gamma_4 = a1 a2 a3 a4
  const std::vector<std::int64_t> b{3, 2, 2, 1};
  CHECK(tgs::gamma_table(b) == std::vector<BigInt>{1, 3, 11, 4, 12});
}

TEST_CASE("dynamic program agrees with enumeration on random signed input") {
  std::mt19937 rng(314159);
  for (int n = 1; n <= 10; ++n) {
    for (int rep = 0; rep < 12; ++rep) {
      const auto a = random_signed(rng, n);
      for (int l = 0; l <= n; ++l) CHECK(tgs::gamma_value(a, l) == gamma_by_enumeration(a, l));
    }
  }
}

TEST_CASE("closed form equals the determinant recurrence") {
  const IntPolynomial z{2, 1};
  const IntPolynomial y{1, 1};

  SUBCASE("single entry") {
    const std::vector<std::int64_t> a{5};
    CHECK(tgs::p_tridiag_recurrence(a, IntPolynomial::x(), y) == IntPolynomial{5, 1});
    CHECK(tgs::p_closed_form(a, IntPolynomial::x(), y) == IntPolynomial{5, 1});
  }

  SUBCASE("random signed sequences, standard substitution") {
    std::mt19937 rng(2718);
    for (int n = 1; n <= 10; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_signed(rng, n);
        CHECK(tgs::p_closed_form(a, z, y) == tgs::p_tridiag_recurrence(a, z, y));
      }
    }
  }

  SUBCASE("other substitutions") {
    const IntPolynomial z2{3, 2};
    const IntPolynomial y2{-1, 1};
    std::mt19937 rng(99);
    for (int n = 1; n <= 8; ++n) {
      for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_signed(rng, n);
        CHECK(tgs::p_closed_form(a, z2, y2) == tgs::p_tridiag_recurrence(a, z2, y2));
      }
    }
  }

  SUBCASE("empty input rejected") {
    const std::vector<std::int64_t> none;
    CHECK_THROWS_AS(tgs::p_closed_form(none, z, y), std::invalid_argument);
    CHECK_THROWS_AS(tgs::p_tridiag_recurrence(none, z, y), std::invalid_argument);
  }
}
