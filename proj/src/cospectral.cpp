#include "tgs/cospectral.hpp"

#include "tgs/gamma.hpp"
#include "tgs/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace tgs {

namespace {

std::vector<std::int64_t> prefix_runs(const BlockSequence& blocks, std::size_t count) {
  return std::vector<std::int64_t>(blocks.runs().begin(),
                                   blocks.runs().begin() + static_cast<std::ptrdiff_t>(count));
}

IntPolynomial witness_poly(const BlockSequence& blocks) {
  return monic_canonical(charpoly_exact(distance_matrix(blocks)));
}

void require_four_blocks(const BlockSequence& g, const BlockSequence& h) {
  if (g.n_blocks() != 4 || h.n_blocks() != 4)
    throw std::invalid_argument("condition is specific to four-block sequences");
}

bool theorem2_oriented(const BlockSequence& a, const BlockSequence& b) {
  const std::int64_t alpha = a.run(0) - b.run(0);
  if (alpha <= 0) return false;
  if (a.run(0) == 1 || b.run(0) == 1) return false;
  if (b.run(1) % 2 != 0) return false;
  const std::int64_t half = b.run(1) / 2;
  return b.run(2) == half + alpha && b.run(3) == 2 * (a.run(0) - 1) &&
         a.run(1) == b.run(1) + 2 * alpha && a.run(2) == half && a.run(3) == 2 * (b.run(0) - 1);
}

CospectralPair witness_checked_pair(const BlockSequence& g, const BlockSequence& h) {
  IntPolynomial pg = witness_poly(g);
  const IntPolynomial ph = witness_poly(h);
  const bool same = pg == ph;
  return {g, h, std::move(pg), same, g != h};
}

}  // namespace

bool necessary_gamma(const BlockSequence& g, const BlockSequence& h) {
  if (g.n_blocks() != h.n_blocks()) return false;
  const std::size_t b = g.n_blocks();
  if (b == 1) return g == h;
  const auto ga = prefix_runs(g, b);
  const auto gb = prefix_runs(h, b);
  const auto pa = prefix_runs(g, b - 1);
  const auto pb = prefix_runs(h, b - 1);
  for (int l = 1; l <= 2; ++l) {
    if (gamma_value(ga, l) != gamma_value(gb, l)) return false;
    if (gamma_value(pa, l) != gamma_value(pb, l)) return false;
  }
  return true;
}

bool necessary_fourblock(const BlockSequence& g, const BlockSequence& h) {
  require_four_blocks(g, h);
  const std::int64_t a1 = g.run(0), a4 = g.run(3);
  const std::int64_t b1 = h.run(0), b4 = h.run(3);
  return a1 * a4 + 2 * a1 == b1 * b4 + 2 * b1 && 2 * a1 + a4 == 2 * b1 + b4;
}

bool theorem2_check(const BlockSequence& g, const BlockSequence& h) {
  require_four_blocks(g, h);
  return theorem2_oriented(g, h) || theorem2_oriented(h, g);
}

CospectralPair theorem2_generate(const Theorem2Params& params) {
  const auto [alpha, beta, b1] = params;
  if (alpha < 1 || beta < 1 || b1 < 2)
    throw std::invalid_argument("family needs alpha >= 1, beta >= 1, b1 >= 2");
  const BlockSequence g({alpha + b1, 2 * (alpha + beta), beta, 2 * (b1 - 1)});
  const BlockSequence h({b1, 2 * beta, alpha + beta, 2 * alpha + 2 * b1 - 2});
  return witness_checked_pair(g, h);
}

std::string_view corollary1_status_name(Corollary1Status s) {
  switch (s) {
    case Corollary1Status::verified_pair: return "verified_pair";
    case Corollary1Status::printed_constraint_imbalance: return "printed_constraint_imbalance";
    case Corollary1Status::degenerate_identical: return "degenerate_identical";
  }
  throw std::logic_error("unknown status");
}

Corollary1Outcome corollary1_generate(const Corollary1Params& params) {
  const auto [i, j, k, l] = params;
  if (i <= 1 || l <= 1 || j < 1 || k < 1)
    throw std::invalid_argument("recipe needs i > 1, l > 1, j >= 1, k >= 1");

  Corollary1Outcome out{params,
                        Corollary1Status::verified_pair,
                        std::nullopt,
                        i + 2 * j + k + 2 * l,
                        2 * i + j + 2 * k + l - 1,
                        2 * i + j + 2 * k + l,
                        false,
                        std::nullopt,
                        {}};
  out.printed_exponent_balances = out.n_h_printed == out.n_g;

  if (i + k == j + l + 1) {
    if (i == l + 1) {
      out.status = Corollary1Status::degenerate_identical;
      out.note =
          "i = l+1 forces the corrected pair to coincide; no nonisomorphic pair exists here";
      return out;
    }
    const BlockSequence g({i, 2 * j, k, 2 * l});
    const BlockSequence h({l + 1, 2 * k, j, 2 * (i - 1)});
    out.status = Corollary1Status::verified_pair;
    out.pair = witness_checked_pair(g, h);
    out.note =
        "corrected exponent 2(i-1) balances the vertex counts; the printed exponent 2i-1 "
        "overshoots by one vertex";
    return out;
  }

  if (i + k == j + l) {
    const BlockSequence g({i, 2 * j, k, 2 * l});
    const BlockSequence printed_h({l + 1, 2 * k, j, 2 * i - 1});
    out.status = Corollary1Status::printed_constraint_imbalance;
    out.printed_pair_cospectral = witness_poly(g) == witness_poly(printed_h);
    out.note =
        "under i+k = j+l the corrected pair is one vertex short; the printed exponent 2i-1 "
        "balances the counts but its final run is odd, so the pair is not D-cospectral";
    return out;
  }

  throw std::invalid_argument(
      "vertex counts cannot balance: need i+k = j+l+1 (or j+l to probe the printed reading)");
}

BlockSequence connected_blocks_by_index(std::int64_t n_vertices, std::uint64_t index) {
  if (n_vertices < 1) throw std::invalid_argument("vertex count must be positive");
  if (n_vertices > 64) throw std::invalid_argument("enumeration supports at most 64 vertices");
  if (n_vertices == 1 ? index != 0 : index >> (n_vertices - 2) != 0)
    throw std::invalid_argument("index out of range for this vertex count");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_vertices), 0);
  for (std::int64_t i = 2; i < n_vertices; ++i)
    bits[static_cast<std::size_t>(i - 1)] = (index >> (i - 2)) & 1u ? 1 : 0;
  if (n_vertices > 1) bits.back() = 1;
  return to_blocks(CreationSequence(std::move(bits)));
}

namespace {

// FNV-1a over the exact coefficient strings. A hash collision only ever
// wastes a witness comparison: pairs are reported from witness equality,
// never from key equality.
std::uint64_t poly_key(const IntPolynomial& poly) {
  std::uint64_t h = 14695981039346656037ull;
  const auto mix = [&h](char ch) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  };
  for (const auto& c : coeff_strings(poly)) {
    for (char ch : c) mix(ch);
    mix(',');
  }
  return h;
}

}  // namespace

SearchResult search_cospectral(const SearchOptions& options,
                               const std::function<void(const CospectralPair&)>& on_pair) {
  if (options.max_vertices < 1) throw std::invalid_argument("max_vertices must be positive");
  if (options.max_vertices > 24)
    throw std::invalid_argument("search space doubles per vertex; 24 is the supported cap");
  int n_threads = options.parallelism > 0 ? options.parallelism
                                          : static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads < 1) n_threads = 1;

  SearchResult result;
  result.summary.max_vertices = options.max_vertices;

  for (std::int64_t n = 1; n <= options.max_vertices; ++n) {
    if (n == 1) {
      ++result.summary.graphs_enumerated;  // the one-vertex graph pairs with nothing
      continue;
    }
    const std::uint64_t count = std::uint64_t{1} << (n - 2);
    result.summary.graphs_enumerated += static_cast<std::int64_t>(count);

    // formula-path key per graph; the slot index is the enumeration mask,
    // so the thread count never changes the outcome
    std::vector<std::uint64_t> keys(count);
    const auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t mask = lo; mask < hi; ++mask)
        keys[mask] = poly_key(full_charpoly(connected_blocks_by_index(n, mask), Method::formula).full_poly);
    };
    const auto want = static_cast<std::uint64_t>(n_threads);
    if (want <= 1 || count < 2 * want) {
      worker(0, count);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (count + want - 1) / want;
      for (std::uint64_t lo = 0; lo < count; lo += chunk)
        pool.emplace_back(worker, lo, std::min(lo + chunk, count));
      for (auto& th : pool) th.join();
    }

    std::map<std::uint64_t, std::vector<std::uint64_t>> buckets;
    for (std::uint64_t mask = 0; mask < count; ++mask) buckets[keys[mask]].push_back(mask);

    std::vector<CospectralPair> found;
    for (const auto& [key, members] : buckets) {
      if (members.size() < 2) continue;
      std::vector<BlockSequence> seqs;
      seqs.reserve(members.size());
      for (auto mask : members) seqs.push_back(connected_blocks_by_index(n, mask));
      std::sort(seqs.begin(), seqs.end());
      std::vector<IntPolynomial> polys;
      polys.reserve(seqs.size());
      for (const auto& s : seqs) polys.push_back(witness_poly(s));
      for (std::size_t x = 0; x < seqs.size(); ++x) {
        for (std::size_t y = x + 1; y < seqs.size(); ++y) {
          if (polys[x] != polys[y]) continue;  // key collision the witness rejects
          found.push_back({seqs[x], seqs[y], polys[x], true, seqs[x] != seqs[y]});
        }
      }
    }
    std::sort(found.begin(), found.end(), [](const CospectralPair& a, const CospectralPair& b) {
      return a.g != b.g ? a.g < b.g : a.h < b.h;
    });
    for (auto& p : found) {
      if (on_pair) on_pair(p);
      result.summary.pairs_per_n[n] += 1;
      ++result.summary.pairs_total;
      result.pairs.push_back(std::move(p));
    }
  }
  return result;
}

}  // namespace tgs
