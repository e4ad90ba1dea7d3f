#include "indep/cayley.hpp"

#include <algorithm>

namespace indep {

MultiplicationTable::MultiplicationTable(const FiniteGroup &g)
    : n_(g.order()), table_(n_ * n_), inverses_(n_), orders_(n_) {
  for (ElemIndex a = 0; a < n_; ++a) {
    for (ElemIndex b = 0; b < n_; ++b) {
      ElemIndex ab = g.at(compose(g.element(a), g.element(b)));
      table_[static_cast<std::size_t>(a) * n_ + b] = ab;
      if (ab == 0)
        inverses_[a] = b;
    }
  }
  for (ElemIndex a = 0; a < n_; ++a) {
    std::size_t k = 1;
    for (ElemIndex x = a; x != 0; x = (*this)(x, a))
      ++k;
    orders_[a] = a == 0 ? 1 : k;
  }
}

CayleyGraph make_cayley_graph(const FiniteGroup &g,
                              std::span<const ElemIndex> generators) {
  CayleyGraph graph;
  graph.order = g.order();
  graph.generators.assign(generators.begin(), generators.end());
  graph.edges.resize(g.order() * generators.size());
  for (ElemIndex x = 0; x < g.order(); ++x)
    for (std::size_t j = 0; j < generators.size(); ++j)
      graph.edges[x * generators.size() + j] =
          g.at(compose(g.element(x), g.element(generators[j])));
  return graph;
}

CayleyGraph make_cayley_graph(const MultiplicationTable &table,
                              std::span<const ElemIndex> generators) {
  CayleyGraph graph;
  graph.order = table.size();
  graph.generators.assign(generators.begin(), generators.end());
  graph.edges.resize(table.size() * generators.size());
  for (ElemIndex x = 0; x < table.size(); ++x)
    for (std::size_t j = 0; j < generators.size(); ++j)
      graph.edges[x * generators.size() + j] = table(x, generators[j]);
  return graph;
}

std::vector<bool> subgroup_mask(const MultiplicationTable &table,
                                std::span<const ElemIndex> generators) {
  std::vector<bool> mask(table.size());
  std::vector<ElemIndex> members{0};
  mask[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElemIndex g : generators) {
      ElemIndex y = table(members[i], g);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
      }
    }
  }
  return mask;
}

} // namespace indep

namespace indep {

std::vector<ElemIndex> greedy_generating_set(const MultiplicationTable &table) {
  std::vector<ElemIndex> gens;
  std::vector<bool> current = subgroup_mask(table, gens);
  std::size_t current_size = 1;
  while (current_size < table.size()) {
    std::size_t best_size = 0;
    ElemIndex best = 0;
    for (ElemIndex x = 0; x < table.size(); ++x) {
      if (current[x])
        continue;
      gens.push_back(x);
      auto mask = subgroup_mask(table, gens);
      gens.pop_back();
      auto size = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
      if (size > best_size) {
        best_size = size;
        best = x;
        if (size == table.size())
          break;
      }
    }
    gens.push_back(best);
    current = subgroup_mask(table, gens);
    current_size = best_size;
  }
  return gens;
}

} // namespace indep
