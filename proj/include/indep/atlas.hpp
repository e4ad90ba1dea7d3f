#pragma once

// Exhaustive classification of subgroup pairs of a small symmetric group.
// Every ordered pair is run through the pipeline, through each check on its
// own, and through the oracle (the unskipped endomorphism-pair search).

#include "indep/pipeline.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace indep {

/// Distinct subgroups of `g` generated by at most `max_gens` of its elements,
/// sorted by order and then by element list. max_gens = 0 means no limit,
/// i.e. the full subgroup lattice. Throws BudgetExceeded when |g| is over
/// `max_order`.
std::vector<FiniteGroup> enumerate_subgroups(const FiniteGroup &g, std::size_t max_gens = 2,
                                             std::size_t max_order = kDefaultMaxGroupOrder);

/// Column order of the per-check slots.
inline constexpr std::array<Step, 8> kAtlasChecks = {
    Step::Step1,  Step::Step2i,  Step::Step2ii,  Step::NormalAsym,
    Step::Step3i, Step::Step3ii, Step::Step3iii, Step::Step3iv};

struct AtlasRow {
  std::string id; ///< "H<i>:H<j>", indices into the sorted subgroup list
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  std::string a_gens; ///< generators joined by ';', "e" for the trivial group
  std::string b_gens;
  std::size_t order_a = 0;
  std::size_t order_b = 0;
  std::optional<std::size_t> join_order;
  /// One verdict per kAtlasChecks entry; nullopt if a budget stopped it.
  std::array<std::optional<Verdict>, 8> checks{};
  Status verdict = Status::Inconclusive;
  Step step = Step::BudgetExceeded;
  /// Independent or Dependent; nullopt when the oracle hit a budget.
  std::optional<Status> oracle;
  bool separated_both = false;
  bool ncl_intersection_trivial = false;
  bool both_normal = false;
  bool gap_region = false;

  /// Pipeline verdict and every decisive check slot match the oracle.
  bool agrees_with_oracle() const;
};

struct AtlasSummary {
  std::size_t degree = 0;
  std::size_t subgroups = 0;
  std::size_t rows = 0;
  std::size_t independent = 0;
  std::size_t dependent = 0;
  std::size_t inconclusive = 0;
  std::map<std::string, std::size_t> by_step;
  std::size_t oracle_disagreements = 0;
  /// Ordered pairs whose verdict differs from that of the reversed pair.
  std::size_t symmetry_violations = 0;
  std::vector<std::string> gap_region;
  /// The gap-region rows whose oracle verdict is Dependent.
  std::vector<std::string> gap_dependent;
};

struct AtlasOptions {
  std::size_t max_gens = 2;
  bool full_lattice = false;
  Config config;
};

struct Atlas {
  std::vector<FiniteGroup> subgroups;
  std::vector<AtlasRow> rows; ///< sorted by (a_gens, b_gens)
  AtlasSummary summary;
};

/// Classifies one pair. `endo_a` / `endo_b` are the endomorphism lists of
/// the two subgroups, used by the oracle.
AtlasRow classify_pair(const SubgroupPair &pair, std::span<const GroupMap> endo_a,
                       std::span<const GroupMap> endo_b, const Config &config);
/// Convenience form that enumerates the endomorphisms itself.
AtlasRow classify_pair(const SubgroupPair &pair, const Config &config = {});

/// All ordered pairs of subgroups of S_n. Rows run in parallel
/// (config.parallelism workers); output does not depend on the worker count.
Atlas classify_all_pairs(std::size_t n, const AtlasOptions &options = {});

AtlasSummary summarize(std::size_t degree, std::size_t subgroups,
                       const std::vector<AtlasRow> &rows);

enum class ReportFormat { Csv, Json };

/// CSV header line (without newline).
std::string csv_header();
std::string render_report(const std::vector<AtlasRow> &rows, const AtlasSummary &summary,
                          ReportFormat format);
/// Writes render_report(...) to `path`. Throws std::runtime_error on I/O
/// failure.
void emit_report(const std::vector<AtlasRow> &rows, const AtlasSummary &summary,
                 const std::string &path, ReportFormat format);

nlohmann::ordered_json to_json(const AtlasRow &row);
nlohmann::ordered_json to_json(const AtlasSummary &summary);

} // namespace indep
