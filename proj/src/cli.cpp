#include "tgs/cli.hpp"

#include "tgs/gamma.hpp"
#include "tgs/json_io.hpp"
#include "tgs/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace tgs {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return hw > 0 ? hw : 1;
}

int cmd_charpoly(const CliConfig& config, std::ostream& out) {
  const auto blocks = to_blocks(parse_sequence(config.sequence));
  std::vector<Method> methods;
  if (config.method == "all")
    methods = {Method::formula, Method::quotient, Method::oracle};
  else
    methods = {*method_from_name(config.method)};

  std::vector<CharPolyResult> results;
  results.reserve(methods.size());
  for (Method m : methods) results.push_back(full_charpoly(blocks, m));

  if (config.format == OutputFormat::json) {
    if (results.size() == 1) {
      out << json_charpoly(results[0]).dump(2) << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& r : results) arr.push_back(json_charpoly(r));
      out << arr.dump(2) << "\n";
    }
  } else {
    if (results.size() == 1) {
      out << to_string(results[0].full_poly) << "\n";
    } else {
      for (const auto& r : results)
        out << method_name(r.method) << ": " << to_string(r.full_poly) << "\n";
    }
  }
  return 0;
}

int cmd_multiplicities(const CliConfig& config, std::ostream& out) {
  const auto blocks = to_blocks(parse_sequence(config.sequence));
  const auto mult = multiplicities(blocks);
  if (config.format == OutputFormat::json) {
    out << Json{{"blocks", json_blocks(blocks)},
                {"n_vertices", blocks.n_vertices()},
                {"m2", mult.m_minus2},
                {"m1", mult.m_minus1}}
               .dump(2)
        << "\n";
  } else {
    out << "m(-2) = " << mult.m_minus2 << ", m(-1) = " << mult.m_minus1 << "\n";
  }
  return 0;
}

int cmd_gamma(const CliConfig& config, std::ostream& out) {
  const auto blocks = to_blocks(parse_sequence(config.sequence));
  std::vector<std::int64_t> runs = blocks.runs();
  if (config.gamma_negated)
    for (auto& r : runs) r = -r;
  const auto table = gamma_table(runs);
  if (config.format == OutputFormat::json) {
    std::vector<std::string> values;
    values.reserve(table.size());
    for (const auto& v : table) values.push_back(to_decimal(v));
    out << Json{{"blocks", json_blocks(blocks)},
                {"negated", config.gamma_negated},
                {"n", blocks.n_blocks()},
                {"values", values}}
               .dump(2)
        << "\n";
  } else {
    for (std::size_t l = 0; l < table.size(); ++l)
      out << "gamma[" << l << "] = " << to_decimal(table[l]) << "\n";
  }
  return 0;
}

std::string verdict_line(const VerifyReport& report) {
  std::string line = to_string(report.blocks);
  if (report.pass) return line + ": PASS";
  line += ": FAIL (";
  bool first = true;
  if (report.first_mismatch_degree) {
    line += "first mismatch at degree " + std::to_string(*report.first_mismatch_degree);
    first = false;
  }
  if (!report.multiplicities_ok) {
    if (!first) line += "; ";
    line += "multiplicity mismatch";
  }
  return line + ")";
}

int cmd_verify_one(const CliConfig& config, std::ostream& out) {
  const auto blocks = to_blocks(parse_sequence(config.sequence));
  const auto report = verify_graph(blocks);
  if (config.format == OutputFormat::json)
    out << json_verify(report).dump(2) << "\n";
  else
    out << verdict_line(report) << "\n";
  return report.pass ? 0 : 1;
}

int cmd_verify_sweep(const CliConfig& config, std::ostream& out) {
  const std::int64_t max_n = *config.exhaustive;
  const int n_threads = resolve_threads(config.parallelism);
  std::int64_t graphs = 0;
  std::vector<VerifyReport> failures;

  for (std::int64_t n = 1; n <= max_n; ++n) {
    const std::uint64_t count = n == 1 ? 1 : std::uint64_t{1} << (n - 2);
    graphs += static_cast<std::int64_t>(count);
    using Found = std::vector<std::pair<std::uint64_t, VerifyReport>>;
    const auto worker = [&](std::uint64_t lo, std::uint64_t hi, Found& sink) {
      for (std::uint64_t index = lo; index < hi; ++index) {
        auto report = verify_graph(connected_blocks_by_index(n, index));
        if (!report.pass) sink.emplace_back(index, std::move(report));
      }
    };
    const auto want = static_cast<std::uint64_t>(n_threads);
    Found merged;
    if (want <= 1 || count < 2 * want) {
      worker(0, count, merged);
    } else {
      const std::uint64_t chunk = (count + want - 1) / want;
      std::vector<Found> sinks((count + chunk - 1) / chunk);
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t * chunk < count; ++t)
        pool.emplace_back(worker, t * chunk, std::min((t + 1) * chunk, count),
                          std::ref(sinks[t]));
      for (auto& th : pool) th.join();
      for (auto& sink : sinks)
        for (auto& item : sink) merged.push_back(std::move(item));
      std::sort(merged.begin(), merged.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    for (auto& [index, report] : merged) failures.push_back(std::move(report));
  }

  const bool pass = failures.empty();
  if (config.format == OutputFormat::json) {
    Json fail_list = Json::array();
    for (const auto& f : failures) fail_list.push_back(json_verify(f));
    out << Json{{"max_vertices", max_n}, {"graphs", graphs}, {"pass", pass}, {"failures", fail_list}}
               .dump(2)
        << "\n";
  } else {
    out << "verified " << graphs << " graphs with at most " << max_n
        << " vertices: " << (pass ? "PASS" : std::to_string(failures.size()) + " FAILED") << "\n";
    for (const auto& f : failures) out << verdict_line(f) << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_family(const CliConfig& config, std::ostream& out) {
  if (config.theorem2) {
    const auto& p = *config.theorem2;
    const auto pair = theorem2_generate(p);
    if (config.format == OutputFormat::json) {
      Json j{{"family", "theorem2"}, {"alpha", p.alpha}, {"beta", p.beta}, {"b1", p.b1}};
      for (auto& [key, value] : json_pair(pair).items()) j[key] = value;
      out << j.dump(2) << "\n";
    } else {
      out << "g = " << to_string(pair.g) << "\n"
          << "h = " << to_string(pair.h) << "\n"
          << "n_vertices = " << pair.g.n_vertices() << "\n"
          << "verified = " << (pair.verified ? "true" : "false") << "\n"
          << "nonisomorphic = " << (pair.nonisomorphic ? "true" : "false") << "\n";
    }
    return pair.verified && pair.nonisomorphic ? 0 : 1;
  }

  const auto outcome = corollary1_generate(*config.corollary1);
  if (config.format == OutputFormat::json) {
    out << json_corollary1(outcome).dump(2) << "\n";
  } else {
    out << "status = " << corollary1_status_name(outcome.status) << "\n"
        << "note = " << outcome.note << "\n";
    if (outcome.pair) {
      out << "g = " << to_string(outcome.pair->g) << "\n"
          << "h = " << to_string(outcome.pair->h) << "\n"
          << "n_vertices = " << outcome.pair->g.n_vertices() << "\n"
          << "verified = " << (outcome.pair->verified ? "true" : "false") << "\n"
          << "nonisomorphic = " << (outcome.pair->nonisomorphic ? "true" : "false") << "\n";
    } else {
      out << "n_g = " << outcome.n_g << "\n"
          << "n_h_corrected = " << outcome.n_h << "\n"
          << "n_h_printed = " << outcome.n_h_printed << "\n"
          << "printed_exponent_balances = " << (outcome.printed_exponent_balances ? "true" : "false")
          << "\n";
      if (outcome.printed_pair_cospectral)
        out << "printed_pair_cospectral = " << (*outcome.printed_pair_cospectral ? "true" : "false")
            << "\n";
    }
  }
  return outcome.status == Corollary1Status::verified_pair && outcome.pair->verified ? 0 : 1;
}

int cmd_search(const CliConfig& config, std::ostream& out) {
  SearchOptions options{config.max_vertices, config.parallelism};
  const auto result = search_cospectral(
      options, [&out](const CospectralPair& p) { out << json_pair(p).dump() << "\n"; });
  out << Json{{"summary", json_summary(result.summary)}}.dump() << "\n";
  return 0;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "charpoly") return cmd_charpoly(config, out);
    if (config.command == "multiplicities") return cmd_multiplicities(config, out);
    if (config.command == "gamma") return cmd_gamma(config, out);
    if (config.command == "verify")
      return config.exhaustive ? cmd_verify_sweep(config, out) : cmd_verify_one(config, out);
    if (config.command == "family") return cmd_family(config, out);
    if (config.command == "search") return cmd_search(config, out);
    err << "error: unknown command '" << config.command << "'\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string format = "text";
  if (const char* env = std::getenv("TGSPECTRA_FORMAT")) format = env;

  CLI::App app{"exact distance characteristic polynomials of connected threshold graphs"};
  app.require_subcommand(1);

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_parallelism = [&](CLI::App* cmd) {
    cmd->add_option("--parallelism", config.parallelism, "worker threads (default: all cores)")
        ->check(CLI::Range(1, 4096));
  };

  auto* charpoly = app.add_subcommand("charpoly", "distance characteristic polynomial");
  charpoly->add_option("sequence", config.sequence, "creation sequence, bits (00101) or runs (0^2 1 0 1)")
      ->required();
  charpoly->add_option("--method", config.method, "formula, quotient, oracle or all")
      ->check(CLI::IsMember({"formula", "quotient", "oracle", "all"}));
  add_format(charpoly);

  auto* mult = app.add_subcommand("multiplicities", "multiplicities of the -2 and -1 distance eigenvalues");
  mult->add_option("sequence", config.sequence, "creation sequence")->required();
  add_format(mult);

  auto* gamma = app.add_subcommand("gamma", "gamma table of the block lengths");
  gamma->add_option("sequence", config.sequence, "creation sequence")->required();
  gamma->add_flag("--negated", config.gamma_negated, "negate the block lengths first");
  add_format(gamma);

  auto* verify = app.add_subcommand("verify", "cross-check formula, quotient and witness");
  verify->add_option("sequence", config.sequence, "creation sequence");
  std::int64_t exhaustive = 0;
  auto* exhaustive_opt =
      verify->add_option("--exhaustive", exhaustive, "sweep every connected graph up to this many vertices")
          ->check(CLI::Range(std::int64_t{1}, std::int64_t{24}));
  add_parallelism(verify);
  add_format(verify);

  auto* family = app.add_subcommand("family", "construct a named cospectral pair");
  std::vector<std::int64_t> theorem2_args;
  std::vector<std::int64_t> corollary1_args;
  auto* kind = family->add_option_group("kind");
  kind->add_option("--theorem2", theorem2_args, "alpha beta b1")->expected(3);
  kind->add_option("--corollary1", corollary1_args, "i j k l")->expected(4);
  kind->require_option(1);
  add_format(family);

  auto* search = app.add_subcommand("search", "exhaustive cospectral pair search (JSON lines)");
  search->add_option("--max-vertices", config.max_vertices, "largest vertex count to scan")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{24}));
  add_parallelism(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const auto picked = app.get_subcommands();
      out << (picked.empty() ? app.help() : picked.front()->help());
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (format != "text" && format != "json") {
    err << "error: TGSPECTRA_FORMAT must be 'text' or 'json'\n";
    return 2;
  }
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  config.command = app.get_subcommands().front()->get_name();

  if (*exhaustive_opt) config.exhaustive = exhaustive;
  if (config.command == "verify" && config.sequence.empty() == !config.exhaustive) {
    err << "error: verify needs a sequence or --exhaustive, not both\n";
    return 2;
  }
  if (theorem2_args.size() == 3)
    config.theorem2 = Theorem2Params{theorem2_args[0], theorem2_args[1], theorem2_args[2]};
  if (corollary1_args.size() == 4)
    config.corollary1 =
        Corollary1Params{corollary1_args[0], corollary1_args[1], corollary1_args[2], corollary1_args[3]};

  return run(config, out, err);
}

}  // namespace tgs
