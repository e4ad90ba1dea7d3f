#include "indep/pipeline.hpp"

#include "indep/error.hpp"
#include "indep/parallel.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace indep {

const char *to_string(Status s) {
  switch (s) {
  case Status::Independent:
    return "independent";
  case Status::Dependent:
    return "dependent";
  case Status::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

namespace {

struct StepNames {
  Step step;
  const char *id;
  const char *label;
};

constexpr StepNames kStepNames[] = {
    {Step::Step1, "step1", "step 1 (A ∩ B)"},
    {Step::Step2i, "step2i", "step 2(i) (commuting pairs)"},
    {Step::Step2ii, "step2ii", "step 2(ii) (order divisibility)"},
    {Step::NormalAsym, "normal_asym", "normality in the join"},
    {Step::Step3i, "step3i", "step 3(i) (B ∩ <Conj(A)>)"},
    {Step::Step3ii, "step3ii", "step 3(ii) (A ∩ <Conj(B)>)"},
    {Step::Step3iii, "step3iii", "step 3(iii) (conjugacy classes of A)"},
    {Step::Step3iv, "step3iv", "step 3(iv) (conjugacy classes of B)"},
    {Step::Step4, "step4", "step 4 (all endomorphism pairs)"},
    {Step::BudgetExceeded, "budget_exceeded", "budget exceeded"},
};

} // namespace

const char *to_string(Step s) {
  for (const auto &n : kStepNames)
    if (n.step == s)
      return n.id;
  return "?";
}

const char *step_label(Step s) {
  for (const auto &n : kStepNames)
    if (n.step == s)
      return n.label;
  return "?";
}

std::optional<Step> parse_step(std::string_view name) {
  for (const auto &n : kStepNames)
    if (name == n.id)
      return n.step;
  return std::nullopt;
}

void validate(const Config &config) {
  if (config.max_group_order < 1 || config.endo_budget < 1 || config.iso_budget < 1)
    throw std::invalid_argument("all budgets must be at least 1");
  if (config.parallelism < 0)
    throw std::invalid_argument("worker count must not be negative");
}

PairSpec pair_spec_from_json(const nlohmann::json &j) {
  if (!j.is_object())
    throw ParseError("pair spec must be a JSON object");
  for (const auto &[key, value] : j.items())
    if (key != "degree" && key != "A" && key != "B")
      throw ParseError("pair spec: unknown key '" + key + "'");
  if (!j.contains("degree") || !j.contains("A") || !j.contains("B"))
    throw ParseError("pair spec needs \"degree\", \"A\" and \"B\"");
  const auto &degree = j.at("degree");
  if (!degree.is_number_integer() || degree.get<std::int64_t>() < 1)
    throw ParseError("pair spec: \"degree\" must be a positive integer");
  PairSpec spec;
  spec.degree = degree.get<std::size_t>();
  auto strings = [](const nlohmann::json &arr, const char *name) {
    if (!arr.is_array())
      throw ParseError(std::string("pair spec: \"") + name + "\" must be an array");
    std::vector<std::string> out;
    for (const auto &x : arr) {
      if (!x.is_string())
        throw ParseError(std::string("pair spec: \"") + name +
                         "\" entries must be cycle strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  spec.a = strings(j.at("A"), "A");
  spec.b = strings(j.at("B"), "B");
  return spec;
}

SubgroupPair build_pair(const PairSpec &spec, const Config &config) {
  validate(config);
  if (spec.degree == 0)
    throw ParseError("degree must be positive");
  auto generate = [&](const std::vector<std::string> &gens) {
    std::vector<Permutation> perms;
    for (const auto &text : gens)
      perms.push_back(parse_cycles(text, spec.degree));
    return FiniteGroup::generated_by(std::move(perms), spec.degree, config.max_group_order);
  };
  return SubgroupPair(generate(spec.a), generate(spec.b), config.max_group_order);
}

SubgroupPair parse_pair_spec(std::string_view json_text, const Config &config) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return build_pair(pair_spec_from_json(j), config);
}

namespace {

bool separated(const FiniteGroup &side, const FiniteGroup &other_closure) {
  for (const Permutation &x : side.elements().subspan(1))
    if (other_closure.contains(x))
      return false;
  return true;
}

std::vector<Step> step3_order(const SubgroupPair &pair, const Config &config) {
  if (config.easier_first && pair.b().order() < pair.a().order())
    return {Step::Step3ii, Step::Step3i, Step::Step3iii, Step::Step3iv};
  return {Step::Step3i, Step::Step3ii, Step::Step3iii, Step::Step3iv};
}

void fill_stats(const SubgroupPair &pair, Decision &d) {
  try {
    d.stats.join_order = pair.join()->order();
    d.stats.ncl_a_order = pair.ncl_a()->order();
    d.stats.ncl_b_order = pair.ncl_b()->order();
  } catch (const BudgetExceeded &) {
  }
  if (!d.certificate.witness)
    return;
  if (const auto *w = std::get_if<witness::Exhaustive>(&*d.certificate.witness)) {
    d.stats.endo_a = w->endo_a;
    d.stats.endo_b = w->endo_b;
  } else if (const auto *w = std::get_if<witness::IncompatiblePair>(&*d.certificate.witness)) {
    d.stats.endo_a = w->endo_a;
    d.stats.endo_b = w->endo_b;
  }
}

constexpr std::size_t kLawWords = 200;
constexpr std::uint64_t kLawSeed = 0x5eed2024;

Diagnostics run_diagnostics(const SubgroupPair &pair, const Config &config) {
  Diagnostics diag;
  try {
    auto report = verify_factoring(pair, config.iso_budget);
    diag.factoring = report;
    diag.factoring_matches_separation =
        report.join_mod_ncl_b_iso_a == separated(pair.a(), *pair.ncl_b()) &&
        report.join_mod_ncl_a_iso_b == separated(pair.b(), *pair.ncl_a());
  } catch (const BudgetExceeded &e) {
    diag.factoring_error = e.what();
  }
  try {
    Extender extender(pair);
    GroupMap maps_a[] = {identity_map(pair.a_ptr()), trivial_map(pair.a_ptr())};
    GroupMap maps_b[] = {identity_map(pair.b_ptr()), trivial_map(pair.b_ptr())};
    for (const auto &alpha : maps_a)
      for (const auto &beta : maps_b) {
        auto ext = extender.extend(alpha, beta);
        if (!ext.exists())
          continue;
        ++diag.law_maps;
        diag.law_words += kLawWords;
        diag.law_violations +=
            product_law_violations(alpha, beta, *ext.extension, kLawWords, kLawSeed);
      }
  } catch (const BudgetExceeded &) {
  }
  return diag;
}

} // namespace

CheckOutcome run_step(const SubgroupPair &pair, Step step, const Config &config) {
  switch (step) {
  case Step::Step1:
    return check_almost_disjoint(pair);
  case Step::Step2i:
    return check_commuting(pair).outcome;
  case Step::Step2ii:
    return check_order_divisibility(pair);
  case Step::NormalAsym:
    return check_normal_asymmetry(pair);
  case Step::Step3i:
    return check_separated_side(pair, Side::A);
  case Step::Step3ii:
    return check_separated_side(pair, Side::B);
  case Step::Step3iii:
    return check_conjugacy_merge_side(pair, Side::A);
  case Step::Step3iv:
    return check_conjugacy_merge_side(pair, Side::B);
  case Step::Step4:
    return brute_force_independent(
        pair, BruteForceOptions{config.endo_budget, config.parallelism, true});
  case Step::BudgetExceeded:
    break;
  }
  return CheckOutcome::inconclusive();
}

Decision decide(const SubgroupPair &pair, const Config &config) {
  validate(config);
  auto start = std::chrono::steady_clock::now();
  Decision d;
  auto settle = [&](Step step, CheckOutcome outcome) {
    d.trace.push_back({step, outcome.verdict});
    if (!outcome.budget.empty())
      throw BudgetExceeded(outcome.budget, outcome.budget == "endo_budget"
                                               ? config.endo_budget
                                               : config.max_group_order);
    if (!outcome.decisive())
      return false;
    d.status = outcome.verdict == Verdict::ProvesDependent ? Status::Dependent
                                                           : Status::Independent;
    d.deciding_step = step;
    d.certificate = std::move(outcome);
    return true;
  };
  auto run = [&] {
    if (settle(Step::Step1, check_almost_disjoint(pair)))
      return;
    if (settle(Step::Step2i, check_commuting(pair).outcome))
      return;
    if (settle(Step::Step2ii, check_order_divisibility(pair)))
      return;
    if (settle(Step::NormalAsym, check_normal_asymmetry(pair)))
      return;
    for (Step step : step3_order(pair, config))
      if (settle(step, run_step(pair, step, config)))
        return;
    settle(Step::Step4, run_step(pair, Step::Step4, config));
  };
  try {
    run();
  } catch (const BudgetExceeded &e) {
    d.status = Status::Inconclusive;
    d.deciding_step = Step::BudgetExceeded;
    d.certificate = CheckOutcome::inconclusive();
    d.budget = e.budget();
    d.reason = e.what();
  }
  fill_stats(pair, d);
  if (config.run_diagnostics)
    d.diagnostics = run_diagnostics(pair, config);
  d.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return d;
}

std::vector<Decision> decide_batch(const std::vector<SubgroupPair> &pairs,
                                   const Config &config) {
  validate(config);
  std::vector<Decision> out(pairs.size());
  Config inner = config;
  inner.parallelism = 1;
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(config.parallelism))
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = decide(pairs[static_cast<std::size_t>(i)], inner);
  return out;
}

namespace {

nlohmann::ordered_json optional_json(const std::optional<std::size_t> &v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

nlohmann::ordered_json to_json(const Decision &d, bool include_timing) {
  using json = nlohmann::ordered_json;
  json out;
  out["status"] = to_string(d.status);
  out["step"] = to_string(d.deciding_step);
  if (d.certificate.witness)
    out["witness"] = to_json(*d.certificate.witness);
  else if (d.status == Status::Inconclusive)
    out["witness"] = {{"kind", "budget_exceeded"}, {"budget", d.budget}, {"reason", d.reason}};
  else
    out["witness"] = nullptr;
  out["stats"] = {{"join_order", optional_json(d.stats.join_order)},
                  {"ncl_a_order", optional_json(d.stats.ncl_a_order)},
                  {"ncl_b_order", optional_json(d.stats.ncl_b_order)},
                  {"endo_a", optional_json(d.stats.endo_a)},
                  {"endo_b", optional_json(d.stats.endo_b)},
                  {"elapsed_ms", include_timing ? json(d.stats.elapsed_ms) : json(nullptr)}};
  if (d.diagnostics) {
    const Diagnostics &g = *d.diagnostics;
    json factoring = nullptr;
    if (g.factoring)
      factoring = {{"join_mod_ncl_b_iso_a", g.factoring->join_mod_ncl_b_iso_a},
                   {"join_mod_ncl_a_iso_b", g.factoring->join_mod_ncl_a_iso_b},
                   {"matches_separation", *g.factoring_matches_separation}};
    else
      factoring = {{"error", g.factoring_error}};
    out["diagnostics"] = {{"factoring", std::move(factoring)},
                          {"product_law",
                           {{"maps", g.law_maps},
                            {"words", g.law_words},
                            {"violations", g.law_violations},
                            {"passed", g.law_violations == 0}}}};
  } else {
    out["diagnostics"] = nullptr;
  }
  return out;
}

std::string format_decision(const Decision &d, OutputFormat format, bool include_timing) {
  if (format == OutputFormat::Json)
    return to_json(d, include_timing).dump(2) + "\n";
  std::ostringstream os;
  std::string verdict = to_string(d.status);
  for (char &c : verdict)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  os << "verdict: " << verdict << "\n";
  os << "step:    " << step_label(d.deciding_step) << "\n";
  if (d.certificate.witness)
    os << "witness: " << describe(*d.certificate.witness) << "\n";
  if (d.status == Status::Inconclusive)
    os << "reason:  " << d.reason << "\n";
  os << "trace:  ";
  for (const auto &t : d.trace)
    os << " " << to_string(t.step) << "=" << to_string(t.verdict);
  os << "\n";
  auto show = [](const std::optional<std::size_t> &v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  os << "stats:   |join| = " << show(d.stats.join_order)
     << ", |<Conj(A)>| = " << show(d.stats.ncl_a_order)
     << ", |<Conj(B)>| = " << show(d.stats.ncl_b_order)
     << ", |End(A)| = " << show(d.stats.endo_a) << ", |End(B)| = " << show(d.stats.endo_b);
  if (include_timing)
    os << ", " << d.stats.elapsed_ms << " ms";
  os << "\n";
  if (d.diagnostics) {
    const Diagnostics &g = *d.diagnostics;
    if (g.factoring)
      os << "factoring: join/<Conj(B)> ≅ A: "
         << (g.factoring->join_mod_ncl_b_iso_a ? "yes" : "no")
         << ", join/<Conj(A)> ≅ B: " << (g.factoring->join_mod_ncl_a_iso_b ? "yes" : "no")
         << ", matches separatedness: "
         << (*g.factoring_matches_separation ? "yes" : "no") << "\n";
    else
      os << "factoring: skipped (" << g.factoring_error << ")\n";
    os << "product law: " << g.law_violations << " violations in " << g.law_words
       << " sampled words over " << g.law_maps << " extended maps\n";
  }
  return os.str();
}

int exit_code(const Decision &d) { return d.status == Status::Inconclusive ? 2 : 0; }

} // namespace indep
