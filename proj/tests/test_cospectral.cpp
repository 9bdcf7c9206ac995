#include "tgs/cospectral.hpp"

#include "tgs/oracle.hpp"

#include <doctest.h>

using tgs::BlockSequence;
using tgs::Corollary1Params;
using tgs::Corollary1Status;
using tgs::Theorem2Params;

TEST_CASE("enumeration by index") {
  CHECK(tgs::connected_blocks_by_index(1, 0) == BlockSequence({1}));
  CHECK(tgs::connected_blocks_by_index(2, 0) == BlockSequence({1, 1}));
  CHECK(tgs::connected_blocks_by_index(4, 0) == BlockSequence({3, 1}));
  CHECK(tgs::connected_blocks_by_index(4, 3) == BlockSequence({1, 3}));
  CHECK_THROWS_AS(tgs::connected_blocks_by_index(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(tgs::connected_blocks_by_index(0, 0), std::invalid_argument);
}

TEST_CASE("four-block characterization fixtures") {
  const BlockSequence g({3, 4, 1, 2});
  const BlockSequence h({2, 2, 2, 4});
  CHECK(tgs::theorem2_check(g, h));
  CHECK(tgs::theorem2_check(h, g));
  CHECK(!tgs::theorem2_check(g, g));
  CHECK(!tgs::theorem2_check(g, BlockSequence({3, 4, 2, 1})));
  CHECK_THROWS_AS(tgs::theorem2_check(g, BlockSequence({1, 1})), std::invalid_argument);
}

TEST_CASE("necessary conditions on a known pair and a known non-pair") {
  const BlockSequence g({3, 4, 1, 2});
  const BlockSequence h({2, 2, 2, 4});
  CHECK(tgs::necessary_gamma(g, h));
  CHECK(tgs::necessary_fourblock(g, h));
  CHECK(tgs::necessary_gamma(g, g));

  CHECK(!tgs::necessary_gamma(BlockSequence({1, 3, 1, 1}), BlockSequence({2, 1, 1, 2})));
  CHECK(!tgs::necessary_fourblock(BlockSequence({1, 1, 1, 1}), BlockSequence({1, 1, 1, 2})));
  CHECK(!tgs::necessary_gamma(BlockSequence({1, 1}), BlockSequence({1, 1, 1, 1})));
  CHECK_THROWS_AS(tgs::necessary_fourblock(g, BlockSequence({1, 1})), std::invalid_argument);
}

TEST_CASE("two-parameter family generator") {
  const auto pair = tgs::theorem2_generate({1, 1, 2});
  CHECK(pair.g == BlockSequence({3, 4, 1, 2}));
  CHECK(pair.h == BlockSequence({2, 2, 2, 4}));
  CHECK(pair.verified);
  CHECK(pair.nonisomorphic);
  CHECK(pair.g.n_vertices() == 10);
  CHECK(pair.poly.degree() == 10);

  const auto p2 = tgs::theorem2_generate({1, 2, 2});
  CHECK(p2.g == BlockSequence({3, 6, 2, 2}));
  CHECK(p2.h == BlockSequence({2, 4, 3, 4}));
  CHECK(p2.g.n_vertices() == 13);

  const auto p3 = tgs::theorem2_generate({2, 1, 3});
  CHECK(p3.g == BlockSequence({5, 6, 1, 4}));
  CHECK(p3.h == BlockSequence({3, 2, 3, 8}));
  CHECK(p3.g.n_vertices() == 16);

  CHECK_THROWS_AS(tgs::theorem2_generate({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(tgs::theorem2_generate({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(tgs::theorem2_generate({1, 1, 1}), std::invalid_argument);
}

TEST_CASE("generated pairs satisfy everything the theory demands") {
  for (std::int64_t alpha = 1; alpha <= 2; ++alpha)
    for (std::int64_t beta = 1; beta <= 2; ++beta)
      for (std::int64_t b1 = 2; b1 <= 3; ++b1) {
        const auto pair = tgs::theorem2_generate({alpha, beta, b1});
        CHECK(pair.verified);
        CHECK(pair.nonisomorphic);
        CHECK(pair.g.n_vertices() == pair.h.n_vertices());
        CHECK(tgs::theorem2_check(pair.g, pair.h));
        CHECK(tgs::necessary_gamma(pair.g, pair.h));
        CHECK(tgs::necessary_fourblock(pair.g, pair.h));
        CHECK(tgs::multiplicities(pair.g) == tgs::multiplicities(pair.h));
      }
}

TEST_CASE("four-parameter recipe diagnosis") {
  SUBCASE("balanced nondegenerate points yield verified pairs") {
    const auto out = tgs::corollary1_generate({2, 1, 3, 3});
    REQUIRE(out.status == Corollary1Status::verified_pair);
    REQUIRE(out.pair.has_value());
    CHECK(out.pair->g == BlockSequence({2, 2, 3, 6}));
    CHECK(out.pair->h == BlockSequence({4, 6, 1, 2}));
    CHECK(out.pair->verified);
    CHECK(out.n_g == 13);
    CHECK(out.n_h == 13);
    CHECK(out.n_h_printed == 14);
    CHECK(!out.printed_exponent_balances);
    CHECK(tgs::theorem2_check(out.pair->g, out.pair->h));
  }

  SUBCASE("printed constraint leaves the corrected pair one vertex short") {
    const auto out = tgs::corollary1_generate({3, 2, 2, 3});
    CHECK(out.status == Corollary1Status::printed_constraint_imbalance);
    CHECK(!out.pair.has_value());
    CHECK(out.n_h == out.n_g - 1);
    CHECK(out.printed_exponent_balances);
    REQUIRE(out.printed_pair_cospectral.has_value());
    CHECK(!*out.printed_pair_cospectral);
  }

  SUBCASE("i = l+1 collapses the pair") {
    const auto out = tgs::corollary1_generate({3, 2, 2, 2});
    CHECK(out.status == Corollary1Status::degenerate_identical);
    CHECK(!out.pair.has_value());
  }

  SUBCASE("domain errors") {
    CHECK_THROWS_AS(tgs::corollary1_generate({1, 1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(tgs::corollary1_generate({2, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(tgs::corollary1_generate({2, 0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(tgs::corollary1_generate({6, 1, 1, 2}), std::invalid_argument);
  }
}

TEST_CASE("search finds exactly the known landscape up to twelve vertices") {
  const auto result = tgs::search_cospectral({12, 0});
  CHECK(result.summary.graphs_enumerated == 2048);
  CHECK(result.summary.pairs_total == 1);
  REQUIRE(result.pairs.size() == 1);
  CHECK(result.pairs[0].g == BlockSequence({2, 2, 2, 4}));
  CHECK(result.pairs[0].h == BlockSequence({3, 4, 1, 2}));
  CHECK(result.pairs[0].verified);
  CHECK(result.pairs[0].nonisomorphic);
  CHECK(!result.summary.truncated);
  CHECK(result.summary.pairs_per_n.at(10) == 1);
}

TEST_CASE("search is deterministic and thread-count independent") {
  const auto seq = tgs::search_cospectral({11, 1});
  const auto par = tgs::search_cospectral({11, 3});
  REQUIRE(seq.pairs.size() == par.pairs.size());
  for (std::size_t i = 0; i < seq.pairs.size(); ++i) {
    CHECK(seq.pairs[i].g == par.pairs[i].g);
    CHECK(seq.pairs[i].h == par.pairs[i].h);
    CHECK(seq.pairs[i].poly == par.pairs[i].poly);
  }
  CHECK(seq.summary.graphs_enumerated == par.summary.graphs_enumerated);
}

TEST_CASE("search surfaces the thirteen-vertex pairs") {
  const auto result = tgs::search_cospectral({13, 0});
  // six pairs at thirteen vertices: three from the four-block family and
  // three with six blocks
  CHECK(result.summary.pairs_per_n.at(13) == 6);
  std::int64_t four_block = 0;
  for (const auto& p : result.pairs)
    if (p.g.n_vertices() == 13 && p.g.n_blocks() == 4 && p.h.n_blocks() == 4) ++four_block;
  CHECK(four_block == 3);
  // every reported pair is genuinely cospectral and distinct
  for (const auto& p : result.pairs) {
    CHECK(p.verified);
    CHECK(p.nonisomorphic);
    CHECK(p.g < p.h);
    CHECK(tgs::multiplicities(p.g) == tgs::multiplicities(p.h));
  }
  CHECK_THROWS_AS(tgs::search_cospectral({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tgs::search_cospectral({25, 0}), std::invalid_argument);
}
