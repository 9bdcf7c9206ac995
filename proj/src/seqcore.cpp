#include "tgs/seqcore.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tgs {

namespace {

// Guards against accidental huge inputs; N^2 exact matrices get expensive
// long before this.
constexpr std::int64_t kMaxVertices = 1'000'000;

[[noreturn]] void bad_input(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

CreationSequence::CreationSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) bad_input("creation sequence is empty");
  for (auto b : bits_)
    if (b != 0 && b != 1) bad_input("creation sequence entries must be 0 or 1");
  if (bits_.front() != 0) bad_input("creation sequence must start with 0");
  if (static_cast<std::int64_t>(bits_.size()) > kMaxVertices)
    bad_input("creation sequence is too long");
}

BlockSequence::BlockSequence(std::vector<std::int64_t> runs) : runs_(std::move(runs)) {
  if (runs_.empty()) bad_input("block sequence is empty");
  std::int64_t total = 0;
  for (auto r : runs_) {
    if (r < 1) bad_input("block lengths must be positive");
    total += r;
    if (total > kMaxVertices) bad_input("block sequence is too long");
  }
}

std::int64_t BlockSequence::n_vertices() const {
  std::int64_t total = 0;
  for (auto r : runs_) total += r;
  return total;
}

CreationSequence parse_sequence(std::string_view text) {
  const bool run_form =
      text.find('^') != std::string_view::npos || text.find_first_of(" \t") != std::string_view::npos;
  std::vector<std::uint8_t> bits;
  if (!run_form) {
    if (text.empty()) bad_input("empty sequence");
    bits.reserve(text.size());
    for (char ch : text) {
      if (ch != '0' && ch != '1') bad_input(std::string("unexpected character '") + ch + "' in sequence");
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return CreationSequence(std::move(bits));
  }

  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token[0] != '0' && token[0] != '1')
      bad_input("run token must start with 0 or 1: '" + token + "'");
    const std::uint8_t bit = static_cast<std::uint8_t>(token[0] - '0');
    std::int64_t count = 1;
    if (token.size() > 1) {
      if (token[1] != '^') bad_input("malformed run token: '" + token + "'");
      const std::string digits = token.substr(2);
      if (digits.empty()) bad_input("missing exponent in run token: '" + token + "'");
      for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          bad_input("exponent must be a positive integer: '" + token + "'");
      try {
        count = std::stoll(digits);
      } catch (const std::out_of_range&) {
        bad_input("exponent out of range: '" + token + "'");
      }
      if (count < 1) bad_input("exponent must be positive: '" + token + "'");
    }
    if (static_cast<std::int64_t>(bits.size()) + count > kMaxVertices)
      bad_input("sequence is too long");
    bits.insert(bits.end(), static_cast<std::size_t>(count), bit);
  }
  if (bits.empty()) bad_input("empty sequence");
  return CreationSequence(std::move(bits));
}

BlockSequence to_blocks(const CreationSequence& seq) {
  std::vector<std::int64_t> runs;
  for (auto b : seq.bits()) {
    const bool ones_run = runs.size() % 2 == 0;  // next run would count ones
    if (!runs.empty() && (b == 1) == ones_run)
      ++runs.back();
    else
      runs.push_back(1);
  }
  return BlockSequence(std::move(runs));
}

CreationSequence expand_blocks(const BlockSequence& blocks) {
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(blocks.n_vertices()));
  for (std::size_t i = 0; i < blocks.n_blocks(); ++i) {
    const std::uint8_t bit = i % 2 == 0 ? 0 : 1;
    bits.insert(bits.end(), static_cast<std::size_t>(blocks.run(i)), bit);
  }
  return CreationSequence(std::move(bits));
}

bool is_connected(const CreationSequence& seq) {
  return seq.n_vertices() == 1 || seq.bits().back() == 1;
}

bool is_connected(const BlockSequence& blocks) {
  if (blocks.n_blocks() % 2 == 0) return true;
  return blocks.n_blocks() == 1 && blocks.run(0) == 1;
}

IntMatrix distance_matrix(const CreationSequence& seq) {
  if (!is_connected(seq)) bad_input("distance matrix requires a connected graph");
  const auto n = static_cast<Eigen::Index>(seq.n_vertices());
  IntMatrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i, i) = 0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = seq.bits()[static_cast<std::size_t>(j)] == 1 ? 1 : 2;
      d(j, i) = d(i, j);
    }
  }
  return d;
}

IntMatrix distance_matrix(const BlockSequence& blocks) {
  return distance_matrix(expand_blocks(blocks));
}

bool is_isomorphic(const BlockSequence& a, const BlockSequence& b) { return a == b; }

std::string to_string(const CreationSequence& seq) {
  std::string out;
  out.reserve(seq.n_vertices());
  for (auto b : seq.bits()) out += static_cast<char>('0' + b);
  return out;
}

std::string to_string(const BlockSequence& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.n_blocks(); ++i) {
    if (i) out += ' ';
    out += i % 2 == 0 ? '0' : '1';
    out += '^';
    out += std::to_string(blocks.run(i));
  }
  return out;
}

}  // namespace tgs
