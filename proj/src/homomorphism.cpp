#include "indep/homomorphism.hpp"

#include "indep/error.hpp"
#include "indep/parallel.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace indep {

GroupMap::GroupMap(GroupPtr domain, GroupPtr codomain, std::vector<ElemIndex> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      table_(std::move(table)) {
  if (table_.size() != domain_->order())
    throw std::invalid_argument("GroupMap: table size differs from domain order");
  for (ElemIndex y : table_)
    if (y >= codomain_->order())
      throw std::invalid_argument("GroupMap: image index out of range");
}

const Permutation &GroupMap::operator()(const Permutation &x) const {
  return image_at(domain_->at(x));
}

std::size_t GroupMap::image_size() const {
  std::vector<bool> hit(codomain_->order());
  std::size_t n = 0;
  for (ElemIndex y : table_)
    if (!hit[y]) {
      hit[y] = true;
      ++n;
    }
  return n;
}

bool GroupMap::is_identity() const {
  for (ElemIndex i = 0; i < table_.size(); ++i)
    if (image_at(i) != domain_->element(i))
      return false;
  return true;
}

bool GroupMap::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [](ElemIndex y) { return y == 0; });
}

bool GroupMap::is_homomorphism() const {
  const FiniteGroup &g = *domain_;
  const FiniteGroup &h = *codomain_;
  for (ElemIndex x = 0; x < g.order(); ++x)
    for (ElemIndex y = 0; y < g.order(); ++y) {
      ElemIndex xy = g.at(compose(g.element(x), g.element(y)));
      if (h.element(table_[xy]) != compose(h.element(table_[x]), h.element(table_[y])))
        return false;
    }
  return true;
}

GroupMap identity_map(const GroupPtr &g) {
  std::vector<ElemIndex> table(g->order());
  for (ElemIndex i = 0; i < table.size(); ++i)
    table[i] = i;
  return GroupMap(g, g, std::move(table));
}

GroupMap trivial_map(const GroupPtr &g) {
  return GroupMap(g, g, std::vector<ElemIndex>(g->order(), 0));
}

nlohmann::ordered_json to_json(const GroupMap &map) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (ElemIndex i = 0; i < map.domain().order(); ++i)
    out[format(map.domain().element(i))] = format(map.image_at(i));
  return out;
}

bool endomorphism_less(const GroupMap &lhs, const GroupMap &rhs) {
  std::size_t li = lhs.image_size(), ri = rhs.image_size();
  if (li != ri)
    return li > ri;
  return std::lexicographical_compare(lhs.table().begin(), lhs.table().end(),
                                      rhs.table().begin(), rhs.table().end());
}

namespace {

// Tuples of generator images beyond this count are refused as over budget.
constexpr std::size_t kMaxEndomorphismCandidates = std::size_t{1} << 20;

struct EndomorphismSearch {
  MultiplicationTable table;
  CayleyGraph graph;
  std::vector<std::vector<ElemIndex>> candidates;
  std::size_t total = 1;

  EndomorphismSearch(const FiniteGroup &g, std::size_t budget) : table(g) {
    auto gens = greedy_generating_set(table);
    graph = make_cayley_graph(table, gens);
    for (ElemIndex x : gens) {
      std::vector<ElemIndex> cands;
      for (ElemIndex y = 0; y < table.size(); ++y)
        if (table.element_order(x) % table.element_order(y) == 0)
          cands.push_back(y);
      if (total > kMaxEndomorphismCandidates / cands.size())
        throw BudgetExceeded("endo_budget", budget);
      total *= cands.size();
      candidates.push_back(std::move(cands));
    }
  }

  // Tuple number t in mixed radix, last generator varying fastest.
  std::optional<std::vector<ElemIndex>> try_tuple(std::size_t t,
                                                  std::vector<ElemIndex> &images) const {
    for (std::size_t j = candidates.size(); j-- > 0;) {
      images[j] = candidates[j][t % candidates[j].size()];
      t /= candidates[j].size();
    }
    auto prop = propagate(graph, graph.degree(),
                          [&](ElemIndex y, std::size_t j) { return table(y, images[j]); });
    if (prop.conflict)
      return std::nullopt;
    return std::move(prop.table);
  }
};

std::vector<GroupMap> finish(const GroupPtr &g, std::vector<std::vector<ElemIndex>> tables) {
  struct Keyed {
    std::size_t image_size;
    std::vector<ElemIndex> table;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(tables.size());
  for (auto &t : tables) {
    std::vector<bool> hit(g->order());
    std::size_t n = 0;
    for (ElemIndex y : t)
      if (!hit[y]) {
        hit[y] = true;
        ++n;
      }
    keyed.push_back({n, std::move(t)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed &l, const Keyed &r) {
    if (l.image_size != r.image_size)
      return l.image_size > r.image_size;
    return l.table < r.table;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const Keyed &l, const Keyed &r) { return l.table == r.table; }),
              keyed.end());
  std::vector<GroupMap> maps;
  maps.reserve(keyed.size());
  for (auto &k : keyed)
    maps.emplace_back(g, g, std::move(k.table));
  return maps;
}

void check_budget(const FiniteGroup &g, std::size_t budget) {
  if (g.order() > budget)
    throw BudgetExceeded("endo_budget", budget);
}

} // namespace

std::vector<GroupMap> enumerate_endomorphisms_serial(const GroupPtr &g, std::size_t budget) {
  check_budget(*g, budget);
  EndomorphismSearch search(*g, budget);
  std::vector<std::vector<ElemIndex>> found;
  std::vector<ElemIndex> images(search.candidates.size());
  for (std::size_t t = 0; t < search.total; ++t)
    if (auto table = search.try_tuple(t, images))
      found.push_back(std::move(*table));
  return finish(g, std::move(found));
}

std::vector<GroupMap> enumerate_endomorphisms(const GroupPtr &g, EndomorphismOptions options) {
  check_budget(*g, options.budget);
  EndomorphismSearch search(*g, options.budget);
  std::vector<std::vector<ElemIndex>> found;
  const auto total = static_cast<std::int64_t>(search.total);
#pragma omp parallel num_threads(resolve_jobs(options.jobs)) if (total > 256)
  {
    std::vector<std::vector<ElemIndex>> local;
    std::vector<ElemIndex> images(search.candidates.size());
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < total; ++t)
      if (auto table = search.try_tuple(static_cast<std::size_t>(t), images))
        local.push_back(std::move(*table));
#pragma omp critical(indep_endo_merge)
    for (auto &t : local)
      found.push_back(std::move(t));
  }
  return finish(g, std::move(found));
}

Extender::Extender(const SubgroupPair &pair)
    : a_(pair.a_ptr()), b_(pair.b_ptr()), join_(pair.join()) {
  const FiniteGroup &j = *join_;
  for (const Permutation &x : a_->elements())
    a_in_join_.push_back(j.at(x));
  for (const Permutation &x : b_->elements())
    b_in_join_.push_back(j.at(x));
  std::vector<ElemIndex> gens;
  for (const Permutation &x : a_->generators()) {
    gens.push_back(j.at(x));
    generator_source_.emplace_back(0, a_->at(x));
  }
  for (const Permutation &x : b_->generators()) {
    gens.push_back(j.at(x));
    generator_source_.emplace_back(1, b_->at(x));
  }
  graph_ = make_cayley_graph(j, gens);
  auto right_columns = [&](const FiniteGroup &side, std::vector<ElemIndex> &out) {
    out.resize(side.order() * j.order());
    for (ElemIndex i = 0; i < side.order(); ++i)
      for (ElemIndex z = 0; z < j.order(); ++z)
        out[static_cast<std::size_t>(i) * j.order() + z] =
            j.at(compose(j.element(z), side.element(i)));
  };
  right_columns(*a_, right_a_);
  right_columns(*b_, right_b_);
}

Propagation Extender::run(std::span<const ElemIndex> alpha,
                          std::span<const ElemIndex> beta) const {
  const std::size_t n = join_->order();
  return propagate(graph_, graph_.degree(), [&](ElemIndex y, std::size_t g) {
    auto [side, idx] = generator_source_[g];
    if (side == 0)
      return right_a_[static_cast<std::size_t>(alpha[idx]) * n + y];
    return right_b_[static_cast<std::size_t>(beta[idx]) * n + y];
  });
}

std::optional<PropagationConflict>
Extender::find_conflict(std::span<const ElemIndex> alpha,
                        std::span<const ElemIndex> beta) const {
  auto prop = run(alpha, beta);
  if (prop.conflict)
    return prop.conflict;
  // Agreement with alpha on all of A and beta on all of B.
  for (ElemIndex i = 0; i < a_in_join_.size(); ++i)
    if (prop.table[a_in_join_[i]] != a_in_join_[alpha[i]])
      return PropagationConflict{a_in_join_[i], prop.table[a_in_join_[i]],
                                 a_in_join_[alpha[i]]};
  for (ElemIndex i = 0; i < b_in_join_.size(); ++i)
    if (prop.table[b_in_join_[i]] != b_in_join_[beta[i]])
      return PropagationConflict{b_in_join_[i], prop.table[b_in_join_[i]],
                                 b_in_join_[beta[i]]};
  return std::nullopt;
}

ExtensionResult Extender::extend(const GroupMap &alpha, const GroupMap &beta) const {
  if (!(alpha.domain() == *a_) || !(alpha.codomain() == *a_) ||
      !(beta.domain() == *b_) || !(beta.codomain() == *b_))
    throw std::invalid_argument("extend: maps are not endomorphisms of the pair");
  ExtensionResult result;
  if (auto c = find_conflict(alpha.table(), beta.table())) {
    const FiniteGroup &j = *join_;
    result.conflict = ExtensionConflict{j.element(c->element), j.element(c->first_image),
                                        j.element(c->second_image)};
    return result;
  }
  auto prop = run(alpha.table(), beta.table());
  result.extension.emplace(join_, join_, std::move(prop.table));
  return result;
}

ExtensionResult extend(const GroupMap &alpha, const GroupMap &beta,
                       const SubgroupPair &pair) {
  return Extender(pair).extend(alpha, beta);
}

bool is_compatible(const GroupMap &alpha, const GroupMap &beta, const SubgroupPair &pair) {
  return extend(alpha, beta, pair).exists();
}

std::size_t product_law_violations(const GroupMap &alpha, const GroupMap &beta,
                                   const GroupMap &gamma, std::size_t words,
                                   std::uint64_t seed) {
  const FiniteGroup &a = alpha.domain();
  const FiniteGroup &b = beta.domain();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 6);
  std::uniform_int_distribution<ElemIndex> pick_a(0, static_cast<ElemIndex>(a.order() - 1));
  std::uniform_int_distribution<ElemIndex> pick_b(0, static_cast<ElemIndex>(b.order() - 1));
  std::size_t violations = 0;
  for (std::size_t w = 0; w < words; ++w) {
    Permutation word(a.degree()), mapped(a.degree());
    for (std::size_t n = length(rng); n > 0; --n) {
      ElemIndex i = pick_a(rng), j = pick_b(rng);
      word = compose(compose(word, a.element(i)), b.element(j));
      mapped = compose(compose(mapped, alpha.image_at(i)), beta.image_at(j));
    }
    if (gamma(word) != mapped)
      ++violations;
  }
  return violations;
}

} // namespace indep
