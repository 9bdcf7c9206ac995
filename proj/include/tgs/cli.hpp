#pragma once

#include "tgs/cospectral.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tgs {

enum class OutputFormat { text, json };

// Parsed invocation. run() performs the work against the given streams and
// returns the process exit code: 0 success, 1 a verification found a
// mismatch, 2 bad usage or malformed input.
struct CliConfig {
  std::string command;  // charpoly | multiplicities | gamma | verify | family | search
  std::string sequence;
  std::string method = "formula";  // charpoly: formula | quotient | oracle | all
  OutputFormat format = OutputFormat::text;
  bool gamma_negated = false;
  std::optional<std::int64_t> exhaustive;  // verify: sweep every graph up to this size
  int parallelism = 0;                     // 0 picks the hardware thread count
  std::optional<Theorem2Params> theorem2;
  std::optional<Corollary1Params> corollary1;
  std::int64_t max_vertices = 0;  // search
};

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// argv front door: parses into a CliConfig (honoring TGSPECTRA_FORMAT for
// the default output format) and dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tgs
