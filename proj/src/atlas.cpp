#include "indep/atlas.hpp"

#include "indep/cayley.hpp"
#include "indep/error.hpp"
#include "indep/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace indep {

std::vector<FiniteGroup> enumerate_subgroups(const FiniteGroup &g, std::size_t max_gens,
                                             std::size_t max_order) {
  if (g.order() > max_order)
    throw BudgetExceeded("max_group_order", max_order);
  const MultiplicationTable table(g);
  const auto n = static_cast<ElemIndex>(g.order());

  struct Found {
    std::vector<bool> mask;
    std::vector<ElemIndex> gens;
  };
  std::set<std::vector<bool>> seen;
  std::vector<Found> all;
  std::vector<Found> frontier;
  std::vector<bool> trivial(n, false);
  trivial[0] = true;
  seen.insert(trivial);
  frontier.push_back({trivial, {}});
  all.push_back(frontier.back());

  // Level k holds the subgroups first reached with k generators.
  for (std::size_t level = 1; !frontier.empty() && (max_gens == 0 || level <= max_gens);
       ++level) {
    std::vector<Found> next;
    for (const Found &h : frontier)
      for (ElemIndex x = 1; x < n; ++x) {
        if (h.mask[x])
          continue;
        std::vector<ElemIndex> gens = h.gens;
        gens.push_back(x);
        auto mask = subgroup_mask(table, gens);
        if (seen.insert(mask).second)
          next.push_back({std::move(mask), std::move(gens)});
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<FiniteGroup> out;
  out.reserve(all.size());
  for (const Found &h : all) {
    std::vector<Permutation> elems;
    for (ElemIndex i = 0; i < n; ++i)
      if (h.mask[i])
        elems.push_back(g.element(i));
    out.push_back(FiniteGroup::from_elements(g.degree(), std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const FiniteGroup &l, const FiniteGroup &r) {
    if (l.order() != r.order())
      return l.order() < r.order();
    return std::lexicographical_compare(l.elements().begin(), l.elements().end(),
                                        r.elements().begin(), r.elements().end());
  });
  return out;
}

bool AtlasRow::agrees_with_oracle() const {
  if (!oracle)
    return true;
  if (verdict != Status::Inconclusive && verdict != *oracle)
    return false;
  for (const auto &slot : checks) {
    if (slot == Verdict::ProvesDependent && *oracle != Status::Dependent)
      return false;
    if (slot == Verdict::ProvesIndependent && *oracle != Status::Independent)
      return false;
  }
  return true;
}

namespace {

std::string generator_string(const FiniteGroup &g) {
  if (g.generators().empty())
    return "e";
  std::string out;
  for (const Permutation &x : g.generators()) {
    if (!out.empty())
      out += ";";
    out += format(x);
  }
  return out;
}

} // namespace

AtlasRow classify_pair(const SubgroupPair &pair, std::span<const GroupMap> endo_a,
                       std::span<const GroupMap> endo_b, const Config &config) {
  Config cfg = config;
  cfg.parallelism = 1;
  cfg.run_diagnostics = false;

  AtlasRow row;
  row.a_gens = generator_string(pair.a());
  row.b_gens = generator_string(pair.b());
  row.order_a = pair.a().order();
  row.order_b = pair.b().order();

  for (std::size_t k = 0; k < kAtlasChecks.size(); ++k) {
    try {
      CheckOutcome out = run_step(pair, kAtlasChecks[k], cfg);
      if (out.budget.empty())
        row.checks[k] = out.verdict;
    } catch (const BudgetExceeded &) {
    }
  }

  Decision d = decide(pair, cfg);
  row.verdict = d.status;
  row.step = d.deciding_step;
  row.join_order = d.stats.join_order;

  if (!endo_a.empty() && !endo_b.empty()) {
    CheckOutcome oracle = brute_force_independent(
        pair, endo_a, endo_b, BruteForceOptions{cfg.endo_budget, 1, false});
    if (oracle.verdict == Verdict::ProvesIndependent)
      row.oracle = Status::Independent;
    else if (oracle.verdict == Verdict::ProvesDependent)
      row.oracle = Status::Dependent;
  }

  try {
    const FiniteGroup &ncl_a = *pair.ncl_a();
    const FiniteGroup &ncl_b = *pair.ncl_b();
    row.separated_both = intersection(pair.a(), ncl_b).is_trivial() &&
                         intersection(pair.b(), ncl_a).is_trivial();
    row.ncl_intersection_trivial = intersection(ncl_a, ncl_b).is_trivial();
    row.both_normal =
        is_normal_in(pair.a(), *pair.join()) && is_normal_in(pair.b(), *pair.join());
  } catch (const BudgetExceeded &) {
  }
  row.gap_region = row.separated_both && !row.ncl_intersection_trivial && row.oracle;
  return row;
}

AtlasRow classify_pair(const SubgroupPair &pair, const Config &config) {
  std::vector<GroupMap> endo_a, endo_b;
  try {
    endo_a = enumerate_endomorphisms_serial(pair.a_ptr(), config.endo_budget);
    endo_b = enumerate_endomorphisms_serial(pair.b_ptr(), config.endo_budget);
  } catch (const BudgetExceeded &) {
    endo_a.clear();
    endo_b.clear();
  }
  return classify_pair(pair, endo_a, endo_b, config);
}

Atlas classify_all_pairs(std::size_t n, const AtlasOptions &options) {
  const Config &config = options.config;
  validate(config);
  Atlas atlas;
  FiniteGroup sn = FiniteGroup::symmetric(n);
  atlas.subgroups =
      enumerate_subgroups(sn, options.full_lattice ? 0 : options.max_gens, config.max_group_order);
  const std::size_t m = atlas.subgroups.size();
  const int workers = resolve_jobs(config.parallelism);

  std::vector<GroupPtr> groups;
  for (const FiniteGroup &h : atlas.subgroups)
    groups.push_back(share(h));

  std::vector<std::vector<GroupMap>> endos(m);
  const auto m64 = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t i = 0; i < m64; ++i) {
    try {
      endos[i] = enumerate_endomorphisms_serial(groups[i], config.endo_budget);
    } catch (const BudgetExceeded &) {
    }
  }

  atlas.rows.resize(m * m);
  const auto total = static_cast<std::int64_t>(m * m);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t p = 0; p < total; ++p) {
    const std::size_t i = static_cast<std::size_t>(p) / m, j = static_cast<std::size_t>(p) % m;
    AtlasRow &row = atlas.rows[static_cast<std::size_t>(p)];
    try {
      SubgroupPair pair(groups[i], groups[j], config.max_group_order);
      row = classify_pair(pair, endos[i], endos[j], config);
    } catch (const BudgetExceeded &) {
      row.a_gens = generator_string(*groups[i]);
      row.b_gens = generator_string(*groups[j]);
      row.order_a = groups[i]->order();
      row.order_b = groups[j]->order();
    }
    row.a_index = i;
    row.b_index = j;
    row.id = "H" + std::to_string(i) + ":H" + std::to_string(j);
  }

  std::sort(atlas.rows.begin(), atlas.rows.end(), [](const AtlasRow &l, const AtlasRow &r) {
    return std::tie(l.a_gens, l.b_gens) < std::tie(r.a_gens, r.b_gens);
  });
  atlas.summary = summarize(n, m, atlas.rows);
  return atlas;
}

AtlasSummary summarize(std::size_t degree, std::size_t subgroups,
                       const std::vector<AtlasRow> &rows) {
  AtlasSummary s;
  s.degree = degree;
  s.subgroups = subgroups;
  s.rows = rows.size();
  std::map<std::pair<std::size_t, std::size_t>, const AtlasRow *> by_key;
  for (const AtlasRow &row : rows)
    by_key[{row.a_index, row.b_index}] = &row;
  for (const AtlasRow &row : rows) {
    switch (row.verdict) {
    case Status::Independent:
      ++s.independent;
      break;
    case Status::Dependent:
      ++s.dependent;
      break;
    case Status::Inconclusive:
      ++s.inconclusive;
      break;
    }
    ++s.by_step[to_string(row.step)];
    if (!row.agrees_with_oracle())
      ++s.oracle_disagreements;
    auto it = by_key.find({row.b_index, row.a_index});
    if (it != by_key.end() &&
        (it->second->verdict != row.verdict || it->second->oracle != row.oracle))
      ++s.symmetry_violations;
    if (row.gap_region) {
      s.gap_region.push_back(row.id);
      if (row.oracle == Status::Dependent)
        s.gap_dependent.push_back(row.id);
    }
  }
  return s;
}

namespace {

const char *slot_string(const std::optional<Verdict> &v) {
  return v ? to_string(*v) : "budget";
}

const char *oracle_string(const std::optional<Status> &s) {
  return s ? to_string(*s) : "budget";
}

} // namespace

std::string csv_header() {
  std::string h = "id,a_gens,b_gens,order_a,order_b,join_order";
  for (Step s : kAtlasChecks)
    h += std::string(",") + to_string(s);
  h += ",verdict,step,oracle,separated_both,ncl_intersection_trivial,both_normal,gap_region";
  return h;
}

nlohmann::ordered_json to_json(const AtlasRow &row) {
  nlohmann::ordered_json j;
  j["id"] = row.id;
  j["a_gens"] = row.a_gens;
  j["b_gens"] = row.b_gens;
  j["order_a"] = row.order_a;
  j["order_b"] = row.order_b;
  j["join_order"] = row.join_order ? nlohmann::ordered_json(*row.join_order)
                                   : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < kAtlasChecks.size(); ++k)
    checks[to_string(kAtlasChecks[k])] = slot_string(row.checks[k]);
  j["checks"] = std::move(checks);
  j["verdict"] = to_string(row.verdict);
  j["step"] = to_string(row.step);
  j["oracle"] = row.oracle ? nlohmann::ordered_json(to_string(*row.oracle))
                           : nlohmann::ordered_json(nullptr);
  j["separated_both"] = row.separated_both;
  j["ncl_intersection_trivial"] = row.ncl_intersection_trivial;
  j["both_normal"] = row.both_normal;
  j["gap_region"] = row.gap_region;
  return j;
}

nlohmann::ordered_json to_json(const AtlasSummary &s) {
  nlohmann::ordered_json j;
  j["degree"] = s.degree;
  j["subgroups"] = s.subgroups;
  j["rows"] = s.rows;
  j["independent"] = s.independent;
  j["dependent"] = s.dependent;
  j["inconclusive"] = s.inconclusive;
  j["by_step"] = s.by_step;
  j["oracle_disagreements"] = s.oracle_disagreements;
  j["symmetry_violations"] = s.symmetry_violations;
  j["gap_region"] = s.gap_region;
  j["gap_dependent"] = s.gap_dependent;
  return j;
}

std::string render_report(const std::vector<AtlasRow> &rows, const AtlasSummary &summary,
                          ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["summary"] = to_json(summary);
    j["rows"] = nlohmann::ordered_json::array();
    for (const AtlasRow &row : rows)
      j["rows"].push_back(to_json(row));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << csv_header() << "\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const AtlasRow &row : rows) {
    os << row.id << "," << row.a_gens << "," << row.b_gens << "," << row.order_a << ","
       << row.order_b << ",";
    if (row.join_order)
      os << *row.join_order;
    for (const auto &slot : row.checks)
      os << "," << slot_string(slot);
    os << "," << to_string(row.verdict) << "," << to_string(row.step) << ","
       << oracle_string(row.oracle) << "," << flag(row.separated_both) << ","
       << flag(row.ncl_intersection_trivial) << "," << flag(row.both_normal) << ","
       << flag(row.gap_region) << "\n";
  }
  return os.str();
}

void emit_report(const std::vector<AtlasRow> &rows, const AtlasSummary &summary,
                 const std::string &path, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  out << render_report(rows, summary, format);
  if (!out)
    throw std::runtime_error("write to " + path + " failed");
}

} // namespace indep
