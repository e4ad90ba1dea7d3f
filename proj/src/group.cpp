#include "indep/group.hpp"

#include "indep/cayley.hpp"
#include "indep/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace indep {

namespace {

void require_degree(const Permutation &p, std::size_t degree) {
  if (p.degree() != degree)
    throw DegreeMismatch(p.degree(), degree);
}

std::vector<Permutation> close_elements(const std::vector<Permutation> &generators,
                                        std::size_t degree, std::size_t max_order) {
  std::vector<Permutation> elements{Permutation(degree)};
  std::unordered_set<Permutation> seen{elements.front()};
  std::vector<Permutation> gens;
  for (const Permutation &g : generators) {
    require_degree(g, degree);
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation &g : gens) {
      Permutation y = compose(elements[i], g);
      if (seen.insert(y).second) {
        if (elements.size() >= max_order)
          throw BudgetExceeded("max_group_order", max_order);
        elements.push_back(std::move(y));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

// Cheap generating set for an already-closed element list: walk the
// elements in canonical order and keep any that is not yet generated.
std::vector<Permutation> covering_generators(std::size_t degree,
                                             const std::vector<Permutation> &elements) {
  std::vector<Permutation> gens;
  std::vector<Permutation> current{Permutation(degree)};
  for (const Permutation &x : elements) {
    if (std::binary_search(current.begin(), current.end(), x))
      continue;
    gens.push_back(x);
    current = close_elements(gens, degree, elements.size());
  }
  return gens;
}

} // namespace

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> elements,
                         std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)),
      generators_(std::move(generators)) {}

FiniteGroup FiniteGroup::generated_by(std::vector<Permutation> generators,
                                      std::size_t degree, std::size_t max_order) {
  if (max_order == 0)
    throw BudgetExceeded("max_group_order", max_order);
  auto elements = close_elements(generators, degree, max_order);
  return FiniteGroup(degree, std::move(elements), std::move(generators));
}

FiniteGroup FiniteGroup::from_elements(std::size_t degree,
                                       std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw std::invalid_argument("element set does not contain the identity");
  for (const Permutation &p : elements)
    require_degree(p, degree);
  auto gens = covering_generators(degree, elements);
  return FiniteGroup(degree, std::move(elements), std::move(gens));
}

FiniteGroup FiniteGroup::trivial(std::size_t degree) {
  return FiniteGroup(degree, {Permutation(degree)}, {});
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 1)
    return trivial(1);
  std::vector<Point> swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<Point>(i);
    cycle[i] = static_cast<Point>((i + 1) % n);
  }
  std::swap(swap[0], swap[1]);
  std::vector<Permutation> gens{Permutation::from_images(swap)};
  if (n > 2)
    gens.push_back(Permutation::from_images(cycle));
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i)
    factorial *= i;
  return generated_by(std::move(gens), n, factorial);
}

std::optional<ElemIndex> FiniteGroup::index_of(const Permutation &p) const {
  if (p.degree() != degree_)
    return std::nullopt;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return static_cast<ElemIndex>(it - elements_.begin());
}

ElemIndex FiniteGroup::at(const Permutation &p) const {
  if (auto i = index_of(p))
    return *i;
  throw std::out_of_range("element " + format(p) + " is not in the group");
}

bool FiniteGroup::is_subset_of(const FiniteGroup &other) const {
  return degree_ == other.degree_ &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) !=
          compose(generators_[j], generators_[i]))
        return false;
  return true;
}

FiniteGroup closure(std::vector<Permutation> generators, std::size_t degree,
                    std::size_t max_order) {
  return FiniteGroup::generated_by(std::move(generators), degree, max_order);
}

FiniteGroup join(const FiniteGroup &a, const FiniteGroup &b, std::size_t max_order) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
  std::vector<Permutation> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return FiniteGroup::generated_by(std::move(gens), a.degree(), max_order);
}

FiniteGroup normal_closure(const FiniteGroup &s, const FiniteGroup &g) {
  if (!s.is_subset_of(g))
    throw std::invalid_argument("normal_closure: S is not contained in G");
  std::vector<Permutation> gens(s.generators().begin(), s.generators().end());
  FiniteGroup n = closure(gens, g.degree(), g.order());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Permutation &x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (!n.contains(c)) {
        gens.push_back(std::move(c));
        n = closure(gens, g.degree(), g.order());
      }
    }
  }
  return n;
}

FiniteGroup intersection(const FiniteGroup &a, const FiniteGroup &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
  if (a == b)
    return a;
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return FiniteGroup::from_elements(a.degree(), std::move(common));
}

bool is_normal_in(const FiniteGroup &h_group, const FiniteGroup &g) {
  if (!h_group.is_subset_of(g))
    throw std::invalid_argument("is_normal_in: H is not contained in G");
  for (const Permutation &x : g.generators())
    for (const Permutation &h : h_group.generators())
      if (!h_group.contains(conjugate(h, x)))
        return false;
  return true;
}

std::vector<Permutation> product_set(std::span<const Permutation> x,
                                     std::span<const Permutation> y) {
  std::vector<Permutation> out;
  out.reserve(x.size() * y.size());
  for (const Permutation &p : x)
    for (const Permutation &q : y)
      out.push_back(compose(p, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConjClassPartition conjugacy_classes(const FiniteGroup &g) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  ConjClassPartition result;
  result.class_of.assign(g.order(), kNone);
  std::vector<Permutation> conjugators;
  for (const Permutation &x : g.generators())
    conjugators.push_back(x);
  for (ElemIndex seed = 0; seed < g.order(); ++seed) {
    if (result.class_of[seed] != kNone)
      continue;
    std::size_t id = result.classes.size();
    std::vector<ElemIndex> members{seed};
    result.class_of[seed] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Permutation &y = g.element(members[i]);
      for (const Permutation &x : conjugators) {
        ElemIndex z = g.at(conjugate(y, x));
        if (result.class_of[z] == kNone) {
          result.class_of[z] = id;
          members.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.classes.push_back(std::move(members));
  }
  return result;
}

QuotientGroup quotient(const FiniteGroup &g, const FiniteGroup &n) {
  if (!is_normal_in(n, g))
    throw std::invalid_argument("quotient: N is not normal in G");
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  QuotientGroup q{FiniteGroup::trivial(1), {}, std::vector<std::size_t>(g.order(), kNone)};
  for (ElemIndex i = 0; i < g.order(); ++i) {
    if (q.coset_of[i] != kNone)
      continue;
    std::size_t id = q.representatives.size();
    q.representatives.push_back(g.element(i));
    for (const Permutation &m : n.elements())
      q.coset_of[g.at(compose(g.element(i), m))] = id;
  }
  std::size_t index = q.representatives.size();
  std::vector<Permutation> action;
  for (const Permutation &s : g.generators()) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c)
      images[c] = static_cast<Point>(
          q.coset_of[g.at(compose(s, q.representatives[c]))]);
    action.push_back(Permutation::from_images(std::move(images)));
  }
  q.group = FiniteGroup::generated_by(std::move(action), index, index == 1 ? 1 : g.order());
  return q;
}

std::vector<ElemIndex> greedy_generating_set(const FiniteGroup &g) {
  return greedy_generating_set(MultiplicationTable(g));
}

namespace {

struct GroupInvariants {
  std::size_t order;
  bool abelian;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> order_and_class_size;

  bool operator==(const GroupInvariants &) const = default;
};

GroupInvariants invariants(const FiniteGroup &g, const ConjClassPartition &classes) {
  GroupInvariants inv{g.order(), g.is_abelian(), {}};
  for (ElemIndex i = 0; i < g.order(); ++i) {
    std::size_t class_size = classes.classes[classes.class_of[i]].size();
    ++inv.order_and_class_size[{element_order(g.element(i)), class_size}];
  }
  return inv;
}

class IsomorphismSearch {
public:
  IsomorphismSearch(const FiniteGroup &g, const FiniteGroup &h)
      : g_table_(g), h_table_(h), g_classes_(conjugacy_classes(g)),
        h_classes_(conjugacy_classes(h)) {
    auto gens = greedy_generating_set(g);
    graph_ = make_cayley_graph(g_table_, gens);
    for (ElemIndex x : gens) {
      std::vector<ElemIndex> cands;
      std::size_t ord = g_table_.element_order(x);
      std::size_t cls = g_classes_.classes[g_classes_.class_of[x]].size();
      for (ElemIndex y = 0; y < h.order(); ++y)
        if (h_table_.element_order(y) == ord &&
            h_classes_.classes[h_classes_.class_of[y]].size() == cls)
          cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
    images_.resize(gens.size());
  }

  bool invariants_match(const FiniteGroup &g, const FiniteGroup &h) const {
    return invariants(g, g_classes_) == invariants(h, h_classes_);
  }

  std::optional<std::vector<ElemIndex>> run() { return search(0); }

private:
  std::optional<std::vector<ElemIndex>> search(std::size_t depth) {
    auto mul = [&](ElemIndex y, std::size_t j) { return h_table_(y, images_[j]); };
    auto prop = propagate(graph_, depth, mul);
    if (prop.conflict)
      return std::nullopt;
    // The partial map must stay injective on the generated subgroup.
    std::vector<bool> used(h_table_.size());
    for (ElemIndex y : prop.table) {
      if (y == kUnassigned)
        continue;
      if (used[y])
        return std::nullopt;
      used[y] = true;
    }
    if (depth == images_.size())
      return std::move(prop.table);
    for (ElemIndex candidate : candidates_[depth]) {
      images_[depth] = candidate;
      if (auto found = search(depth + 1))
        return found;
    }
    return std::nullopt;
  }

  MultiplicationTable g_table_;
  MultiplicationTable h_table_;
  ConjClassPartition g_classes_;
  ConjClassPartition h_classes_;
  CayleyGraph graph_;
  std::vector<std::vector<ElemIndex>> candidates_;
  std::vector<ElemIndex> images_;
};

} // namespace

IsomorphismResult is_isomorphic(const FiniteGroup &g, const FiniteGroup &h,
                                std::size_t budget) {
  if (g.order() > budget || h.order() > budget)
    throw BudgetExceeded("iso_budget", budget);
  if (g.order() != h.order())
    return {};
  IsomorphismSearch search(g, h);
  if (!search.invariants_match(g, h))
    return {};
  if (auto witness = search.run())
    return {true, std::move(*witness)};
  return {};
}

} // namespace indep
