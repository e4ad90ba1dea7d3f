#pragma once

#include "indep/independence.hpp"
#include "indep/subgroup_pair.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace indep {

enum class Status { Independent, Dependent, Inconclusive };

/// Which check settled the decision. Steps 1 to 4 follow the heuristic
/// order; NormalAsym runs between steps 2 and 3.
enum class Step {
  Step1,
  Step2i,
  Step2ii,
  NormalAsym,
  Step3i,
  Step3ii,
  Step3iii,
  Step3iv,
  Step4,
  BudgetExceeded,
};

enum class OutputFormat { Json, Text };

const char *to_string(Status s);
/// Machine name used in JSON ("step2ii", "normal_asym", ...).
const char *to_string(Step s);
/// Human label used in text output ("step 2(ii)", ...).
const char *step_label(Step s);
std::optional<Step> parse_step(std::string_view name);

struct Config {
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  std::size_t endo_budget = kDefaultEndoBudget;
  std::size_t iso_budget = kDefaultIsoBudget;
  bool run_diagnostics = false;
  OutputFormat output_format = OutputFormat::Json;
  int parallelism = 0; ///< worker count, 0 = OpenMP default
  /// Within step 3, take the normal closure of the smaller subgroup first.
  bool easier_first = false;
  /// Emit elapsed_ms; when false it is written as null so output is
  /// byte-stable.
  bool include_timing = true;
};

/// Throws std::invalid_argument unless every budget is at least 1.
void validate(const Config &config);

/// {"degree": n, "A": [cycle strings], "B": [cycle strings]}.
struct PairSpec {
  std::size_t degree = 0;
  std::vector<std::string> a;
  std::vector<std::string> b;
};

PairSpec pair_spec_from_json(const nlohmann::json &j);
/// Parses generators and closes A and B. Throws ParseError for schema or
/// notation problems, BudgetExceeded when a subgroup is too large.
SubgroupPair build_pair(const PairSpec &spec, const Config &config = {});
SubgroupPair parse_pair_spec(std::string_view json_text, const Config &config = {});

struct TraceEntry {
  Step step;
  Verdict verdict;
};

struct Stats {
  std::optional<std::size_t> join_order;
  std::optional<std::size_t> ncl_a_order;
  std::optional<std::size_t> ncl_b_order;
  std::optional<std::size_t> endo_a;
  std::optional<std::size_t> endo_b;
  double elapsed_ms = 0;
};

struct Diagnostics {
  std::optional<FactoringReport> factoring;
  /// Quotient isomorphism agrees with separatedness on both sides.
  std::optional<bool> factoring_matches_separation;
  std::string factoring_error;
  std::size_t law_maps = 0;
  std::size_t law_words = 0;
  std::size_t law_violations = 0;
};

struct Decision {
  Status status = Status::Inconclusive;
  Step deciding_step = Step::BudgetExceeded;
  CheckOutcome certificate;
  /// Budget name and message when status is Inconclusive.
  std::string budget;
  std::string reason;
  Stats stats;
  std::vector<TraceEntry> trace;
  std::optional<Diagnostics> diagnostics;
};

/// Runs the checks in order and stops at the first decisive one; the
/// exhaustive endomorphism search is the last resort. Budget trips give an
/// Inconclusive decision naming the budget.
Decision decide(const SubgroupPair &pair, const Config &config = {});

/// Re-runs the single check attributed to `step`.
CheckOutcome run_step(const SubgroupPair &pair, Step step, const Config &config = {});

/// Decides each pair independently, in parallel; results keep input order.
std::vector<Decision> decide_batch(const std::vector<SubgroupPair> &pairs,
                                   const Config &config);

nlohmann::ordered_json to_json(const Decision &d, bool include_timing = true);
std::string format_decision(const Decision &d, OutputFormat format,
                            bool include_timing = true);

/// 0 decided, 2 inconclusive.
int exit_code(const Decision &d);

} // namespace indep
