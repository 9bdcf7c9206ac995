#pragma once

#include "tgs/bigint.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tgs {

// Binary creation sequence b1..bN of a threshold graph. Vertex i arrives
// isolated when b_i = 0 and dominating when b_i = 1; b1 is normalized to 0,
// which makes the sequence a canonical form: two connected threshold graphs
// are isomorphic exactly when their sequences coincide.
class CreationSequence {
 public:
  explicit CreationSequence(std::vector<std::uint8_t> bits);

  std::size_t n_vertices() const { return bits_.size(); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const CreationSequence& a, const CreationSequence& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const CreationSequence& a, const CreationSequence& b) {
    return !(a == b);
  }

 private:
  std::vector<std::uint8_t> bits_;
};

// Run-length form 0^{a1} 1^{a2} 0^{a3} ... of a creation sequence. Runs
// alternate starting with the isolated run, so odd positions (1-based)
// count zeros and even positions count ones. Consecutive equal runs never
// appear; a connected graph on N >= 2 vertices has an even block count.
class BlockSequence {
 public:
  explicit BlockSequence(std::vector<std::int64_t> runs);

  std::size_t n_blocks() const { return runs_.size(); }
  std::int64_t run(std::size_t i) const { return runs_[i]; }
  const std::vector<std::int64_t>& runs() const { return runs_; }
  std::int64_t n_vertices() const;

  friend bool operator==(const BlockSequence& a, const BlockSequence& b) {
    return a.runs_ == b.runs_;
  }
  friend bool operator!=(const BlockSequence& a, const BlockSequence& b) { return !(a == b); }
  friend bool operator<(const BlockSequence& a, const BlockSequence& b) {
    return a.runs_ < b.runs_;
  }

 private:
  std::vector<std::int64_t> runs_;
};

// Accepts the compact bit form "00011001" and the run form "0^3 1^2 0^2 1"
// (whitespace-separated tokens, exponent defaults to 1). Throws
// std::invalid_argument on malformed input.
CreationSequence parse_sequence(std::string_view text);

BlockSequence to_blocks(const CreationSequence& seq);
CreationSequence expand_blocks(const BlockSequence& blocks);

bool is_connected(const CreationSequence& seq);
bool is_connected(const BlockSequence& blocks);

// Pairwise graph distances: 1 when the later endpoint is dominating at
// arrival, 2 otherwise. Requires a connected sequence.
IntMatrix distance_matrix(const CreationSequence& seq);
IntMatrix distance_matrix(const BlockSequence& blocks);

// Connected threshold graphs only; the normalized sequence is canonical.
bool is_isomorphic(const BlockSequence& a, const BlockSequence& b);

std::string to_string(const CreationSequence& seq);
std::string to_string(const BlockSequence& blocks);

}  // namespace tgs
