// indep: decide subgroup independence, or build an atlas over S_n.
//
//   indep decide --input pair.json [--format text]
//   indep decide --inline --degree 4 --a "(1 2)" --b "(1 3)(2 4)"
//   indep atlas --degree 4 --out s4.csv --format csv
//
// Exit codes: 0 decided, 2 inconclusive (a budget tripped), 1 bad input.

#include "indep/atlas.hpp"
#include "indep/error.hpp"
#include "indep/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace indep;

namespace {

struct DecideArgs {
  std::string input;
  bool inline_spec = false;
  std::size_t degree = 0;
  std::vector<std::string> a, b;
  std::string format = "json";
  bool diagnostics = false;
  bool easier_first = false;
  bool no_timing = false;
};

struct AtlasArgs {
  std::size_t degree = 3;
  std::size_t max_gens = 2;
  bool full_lattice = false;
  std::string out;
  std::string format = "csv";
};

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A subgroup that is too large never reaches the pipeline; it still gets
// an in-band inconclusive decision.
Decision budget_decision(const BudgetExceeded &e) {
  Decision d;
  d.budget = e.budget();
  d.reason = e.what();
  return d;
}

Decision decide_spec(const PairSpec &spec, const Config &config) {
  try {
    return decide(build_pair(spec, config), config);
  } catch (const BudgetExceeded &e) {
    return budget_decision(e);
  }
}

int run_decide(const DecideArgs &args, Config config) {
  config.output_format = args.format == "text" ? OutputFormat::Text : OutputFormat::Json;
  config.run_diagnostics = args.diagnostics;
  config.easier_first = args.easier_first;
  config.include_timing = !args.no_timing;
  validate(config);

  std::vector<PairSpec> specs;
  bool batch = false;
  if (args.inline_spec) {
    if (args.degree == 0)
      throw ParseError("--inline needs --degree");
    specs.push_back(PairSpec{args.degree, args.a, args.b});
  } else {
    if (args.input.empty())
      throw ParseError("decide needs --input FILE|- or --inline");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_input(args.input));
    } catch (const nlohmann::json::parse_error &e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) {
      batch = true;
      for (const auto &item : j)
        specs.push_back(pair_spec_from_json(item));
    } else {
      specs.push_back(pair_spec_from_json(j));
    }
  }

  // Parse every generator first so notation errors abort before any work.
  std::vector<SubgroupPair> pairs;
  std::vector<std::optional<Decision>> early(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    try {
      pairs.push_back(build_pair(specs[i], config));
    } catch (const BudgetExceeded &e) {
      early[i] = budget_decision(e);
    }
  }
  std::vector<Decision> decided =
      batch ? decide_batch(pairs, config)
            : (pairs.empty() ? std::vector<Decision>{} : std::vector{decide(pairs[0], config)});

  std::vector<Decision> results;
  for (std::size_t i = 0, k = 0; i < specs.size(); ++i)
    results.push_back(early[i] ? *early[i] : decided[k++]);

  int code = 0;
  for (const Decision &d : results)
    code = std::max(code, exit_code(d));

  if (!batch) {
    std::cout << format_decision(results[0], config.output_format, config.include_timing);
  } else if (config.output_format == OutputFormat::Json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Decision &d : results)
      out.push_back(to_json(d, config.include_timing));
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i)
      std::cout << (i ? "\n" : "") << "[" << i << "]\n"
                << format_decision(results[i], OutputFormat::Text, config.include_timing);
  }
  return code;
}

int run_atlas(const AtlasArgs &args, Config config) {
  if (args.out.empty())
    throw ParseError("atlas needs --out FILE");
  AtlasOptions options;
  options.max_gens = args.max_gens;
  options.full_lattice = args.full_lattice;
  options.config = config;
  Atlas atlas = classify_all_pairs(args.degree, options);
  emit_report(atlas.rows, atlas.summary, args.out,
              args.format == "json" ? ReportFormat::Json : ReportFormat::Csv);
  const AtlasSummary &s = atlas.summary;
  std::cerr << "S" << s.degree << ": " << s.subgroups << " subgroups, " << s.rows
            << " rows (" << s.independent << " independent, " << s.dependent << " dependent, "
            << s.inconclusive << " inconclusive), oracle disagreements "
            << s.oracle_disagreements << ", symmetry violations " << s.symmetry_violations
            << ", gap region " << s.gap_region.size() << " (" << s.gap_dependent.size()
            << " dependent)\n";
  return s.inconclusive ? 2 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decide independence of subgroup pairs of permutation groups"};
  app.require_subcommand(1);

  Config config;
  DecideArgs dargs;
  AtlasArgs aargs;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--max-group-order", config.max_group_order, "Largest group to enumerate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--endo-budget", config.endo_budget,
                    "Largest group whose endomorphisms are enumerated")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iso-budget", config.iso_budget,
                    "Largest group order for isomorphism tests")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", config.parallelism, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  auto *decide_cmd = app.add_subcommand("decide", "Decide one pair (or a JSON array of pairs)");
  decide_cmd->add_option("--input", dargs.input, "Pair spec JSON file, or - for stdin");
  decide_cmd->add_flag("--inline", dargs.inline_spec, "Take the pair from --degree/--a/--b");
  decide_cmd->add_option("--degree", dargs.degree, "Degree for --inline");
  decide_cmd->add_option("--a", dargs.a, "Generator of A (repeatable)");
  decide_cmd->add_option("--b", dargs.b, "Generator of B (repeatable)");
  decide_cmd->add_option("--format", dargs.format)->check(CLI::IsMember({"json", "text"}));
  decide_cmd->add_flag("--diagnostics", dargs.diagnostics,
                       "Also check the quotient isomorphisms and the product law");
  decide_cmd->add_flag("--easier-first", dargs.easier_first,
                       "Use the smaller subgroup's normal closure first");
  decide_cmd->add_flag("--no-timing", dargs.no_timing, "Write elapsed_ms as null");
  add_common(decide_cmd);

  auto *atlas_cmd = app.add_subcommand("atlas", "Classify every subgroup pair of S_n");
  atlas_cmd->add_option("--degree", aargs.degree, "n")->required()->check(CLI::Range(1, 6));
  atlas_cmd->add_option("--max-gens", aargs.max_gens, "Generators per subgroup")
      ->check(CLI::PositiveNumber);
  atlas_cmd->add_flag("--full-lattice", aargs.full_lattice, "Enumerate every subgroup");
  atlas_cmd->add_option("--out", aargs.out, "Report path")->required();
  atlas_cmd->add_option("--format", aargs.format)->check(CLI::IsMember({"csv", "json"}));
  add_common(atlas_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*decide_cmd)
      return run_decide(dargs, config);
    return run_atlas(aargs, config);
  } catch (const BudgetExceeded &e) {
    std::cerr << "indep: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "indep: " << e.what() << "\n";
    return 1;
  }
}
