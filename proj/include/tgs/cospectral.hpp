#pragma once

#include "tgs/bigint.hpp"
#include "tgs/charpoly.hpp"
#include "tgs/exactpoly.hpp"
#include "tgs/seqcore.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tgs {

// Necessary condition on the gamma sums for two graphs with equal block
// count B to share a distance spectrum: the full-length and the
// (B-1)-prefix gamma values must agree for orders 1 and 2.
bool necessary_gamma(const BlockSequence& g, const BlockSequence& h);

// Sharper necessary condition for B = 4: a1 a4 + 2 a1 and 2 a1 + a4 must
// both match. Throws unless both inputs have exactly four blocks.
bool necessary_fourblock(const BlockSequence& g, const BlockSequence& h);

// Full characterization of D-cospectral pairs with four blocks. With the
// pair oriented so alpha = a1 - b1 > 0, all of the following hold:
//   a1 != 1, b1 != 1, b2 even,
//   b3 = b2/2 + alpha,  b4 = 2(a1 - 1),
//   a2 = b2 + 2 alpha,  a3 = b2/2,  a4 = 2(b1 - 1).
// Tries both orientations. Throws unless both inputs have four blocks.
bool theorem2_check(const BlockSequence& g, const BlockSequence& h);

struct CospectralPair {
  BlockSequence g;
  BlockSequence h;
  IntPolynomial poly;  // shared monic distance characteristic polynomial
  bool verified = false;
  bool nonisomorphic = false;
};

struct Theorem2Params {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t b1 = 0;
};

// Builds the two-parameter-family pair
//   g = (alpha + b1, 2(alpha + beta), beta, 2(b1 - 1))
//   h = (b1, 2 beta, alpha + beta, 2 alpha + 2 b1 - 2)
// and verifies D-cospectrality with the division-free witness.
// Requires alpha >= 1, beta >= 1, b1 >= 2.
CospectralPair theorem2_generate(const Theorem2Params& params);

struct Corollary1Params {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  std::int64_t l = 0;
};

enum class Corollary1Status {
  verified_pair,                 // corrected exponent, balanced, oracle-verified
  printed_constraint_imbalance,  // i+k = j+l: corrected pair cannot balance
  degenerate_identical,          // i = l+1 forces g = h
};

std::string_view corollary1_status_name(Corollary1Status s);

// Diagnosis of the published four-parameter recipe g = (i, 2j, k, 2l),
// h = (l+1, 2k, j, 2(i-1)). As printed, the final exponent reads 2i-1 and
// the side constraint reads i+k = j+l; under that reading the vertex
// counts match but the pairs are never D-cospectral (the final run is odd,
// which the four-block characterization forbids). With the exponent
// corrected to 2(i-1), counts balance exactly when i+k = j+l+1 and every
// nondegenerate point yields a verified pair. The outcome records both
// readings so the off-by-one is machine-checkable.
struct Corollary1Outcome {
  Corollary1Params params;
  Corollary1Status status;
  std::optional<CospectralPair> pair;  // set when status == verified_pair
  std::int64_t n_g = 0;
  std::int64_t n_h = 0;          // corrected exponent 2(i-1)
  std::int64_t n_h_printed = 0;  // printed exponent 2i-1
  bool printed_exponent_balances = false;
  std::optional<bool> printed_pair_cospectral;  // oracle, when the printed pair balances
  std::string note;
};

// Requires i > 1, l > 1, j >= 1, k >= 1 and i+k within {j+l, j+l+1};
// anything else throws std::invalid_argument.
Corollary1Outcome corollary1_generate(const Corollary1Params& params);

// The index enumerates b_2..b_{N-1} as bits (LSB = b_2); b_1 = 0 and
// b_N = 1 are fixed, so every index < 2^(N-2) names one connected graph.
// N = 1 has the single index 0.
BlockSequence connected_blocks_by_index(std::int64_t n_vertices, std::uint64_t index);

struct SearchOptions {
  std::int64_t max_vertices = 0;
  int parallelism = 0;  // 0 picks the hardware thread count
};

struct SearchSummary {
  std::int64_t max_vertices = 0;
  std::int64_t graphs_enumerated = 0;
  std::int64_t pairs_total = 0;
  std::map<std::int64_t, std::int64_t> pairs_per_n;
  bool truncated = false;
};

struct SearchResult {
  std::vector<CospectralPair> pairs;
  SearchSummary summary;
};

// Exhaustive scan of all connected threshold graphs with up to max_vertices
// vertices. Graphs are bucketed by the formula-path polynomial; every
// bucket collision is re-verified with the division-free witness before a
// pair is reported. Output order is deterministic (vertex count, then the
// two block sequences lexicographically) regardless of thread count; the
// callback, when given, sees pairs in that order.
SearchResult search_cospectral(const SearchOptions& options,
                               const std::function<void(const CospectralPair&)>& on_pair = {});

}  // namespace tgs
