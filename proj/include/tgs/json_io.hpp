#pragma once

#include "tgs/charpoly.hpp"
#include "tgs/cospectral.hpp"
#include "tgs/oracle.hpp"

#include <json.hpp>

namespace tgs {

// Insertion-ordered JSON keeps the documented key order stable, and all
// polynomial coefficients travel as decimal strings: they outgrow every
// fixed-width number type almost immediately.
using Json = nlohmann::ordered_json;

inline Json json_blocks(const BlockSequence& blocks) { return Json(blocks.runs()); }

inline Json json_poly(const IntPolynomial& poly) { return Json(coeff_strings(poly)); }

inline Json json_charpoly(const CharPolyResult& r) {
  return Json{{"blocks", json_blocks(r.blocks)},
              {"n_vertices", r.blocks.n_vertices()},
              {"m2", r.mult.m_minus2},
              {"m1", r.mult.m_minus1},
              {"q_coeffs", json_poly(r.q_poly)},
              {"full_coeffs", json_poly(r.full_poly)},
              {"method", std::string(method_name(r.method))}};
}

inline Json json_verify(const VerifyReport& r) {
  Json j{{"blocks", json_blocks(r.blocks)},
         {"pass", r.pass},
         {"first_mismatch_degree", nullptr},
         {"methods_compared", r.methods_compared}};
  if (r.first_mismatch_degree) j["first_mismatch_degree"] = *r.first_mismatch_degree;
  return j;
}

inline Json json_pair(const CospectralPair& p) {
  return Json{{"n_vertices", p.g.n_vertices()},
              {"g", json_blocks(p.g)},
              {"h", json_blocks(p.h)},
              {"poly", json_poly(p.poly)},
              {"verified", p.verified},
              {"nonisomorphic", p.nonisomorphic}};
}

inline Json json_corollary1(const Corollary1Outcome& o) {
  Json j{{"family", "corollary1"},
         {"i", o.params.i},
         {"j", o.params.j},
         {"k", o.params.k},
         {"l", o.params.l},
         {"status", std::string(corollary1_status_name(o.status))},
         {"n_g", o.n_g},
         {"n_h_corrected", o.n_h},
         {"n_h_printed", o.n_h_printed},
         {"printed_exponent_balances", o.printed_exponent_balances},
         {"printed_pair_cospectral", nullptr},
         {"note", o.note},
         {"pair", nullptr}};
  if (o.printed_pair_cospectral) j["printed_pair_cospectral"] = *o.printed_pair_cospectral;
  if (o.pair) j["pair"] = json_pair(*o.pair);
  return j;
}

inline Json json_summary(const SearchSummary& s) {
  Json per_n = Json::object();
  for (const auto& [n, c] : s.pairs_per_n) per_n[std::to_string(n)] = c;
  return Json{{"max_vertices", s.max_vertices},
              {"graphs_enumerated", s.graphs_enumerated},
              {"pairs", s.pairs_total},
              {"pairs_per_n", per_n},
              {"truncated", s.truncated}};
}

}  // namespace tgs
