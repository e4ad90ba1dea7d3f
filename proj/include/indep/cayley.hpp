#pragma once

// Index-level machinery shared by homomorphism enumeration, extension and
// isomorphism search: multiplication tables, Cayley edges and the
// generator-image propagation that turns an assignment on generators into
// a full homomorphism table (or a conflict).

#include "indep/group.hpp"

#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace indep {

inline constexpr ElemIndex kUnassigned = std::numeric_limits<ElemIndex>::max();

/// Full |G| x |G| product table. Intended for small groups only.
class MultiplicationTable {
public:
  explicit MultiplicationTable(const FiniteGroup &g);

  std::size_t size() const noexcept { return n_; }
  /// Index of element(a) * element(b), i.e. b applied first.
  ElemIndex operator()(ElemIndex a, ElemIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  ElemIndex inverse(ElemIndex a) const noexcept { return inverses_[a]; }
  std::size_t element_order(ElemIndex a) const noexcept { return orders_[a]; }

private:
  std::size_t n_;
  std::vector<ElemIndex> table_;
  std::vector<ElemIndex> inverses_;
  std::vector<std::size_t> orders_;
};

/// Greedy small generating set: repeatedly add the element whose addition
/// yields the largest subgroup, ties broken by canonical order.
std::vector<ElemIndex> greedy_generating_set(const MultiplicationTable &table);

/// Right-multiplication edges x -> x·g_j for a fixed generator list.
struct CayleyGraph {
  std::size_t order = 0;
  std::vector<ElemIndex> generators;
  std::vector<ElemIndex> edges; ///< edges[x * k + j] = index of x·g_j

  std::size_t degree() const noexcept { return generators.size(); }
  ElemIndex step(ElemIndex x, std::size_t j) const noexcept {
    return edges[static_cast<std::size_t>(x) * generators.size() + j];
  }
};

CayleyGraph make_cayley_graph(const FiniteGroup &g,
                              std::span<const ElemIndex> generators);
CayleyGraph make_cayley_graph(const MultiplicationTable &table,
                              std::span<const ElemIndex> generators);

/// Elements of the subgroup generated by `generators`, as a membership mask.
std::vector<bool> subgroup_mask(const MultiplicationTable &table,
                                std::span<const ElemIndex> generators);

struct PropagationConflict {
  ElemIndex element;
  ElemIndex first_image;
  ElemIndex second_image;
};

struct Propagation {
  /// table[x] = image of x, or kUnassigned for elements not reached.
  std::vector<ElemIndex> table;
  std::optional<PropagationConflict> conflict;
};

/// Breadth-first propagation of generator images over the Cayley graph,
/// using only the first `used_generators` generators. Every edge is
/// checked: image(x·g) must equal image(x)·image(g). `multiply(y, j)`
/// returns the codomain index of y·image(g_j). With no conflict over all
/// edges of a generating set, the table is a homomorphism.
template <class Multiply>
Propagation propagate(const CayleyGraph &graph, std::size_t used_generators,
                      Multiply &&multiply, ElemIndex identity_image = 0) {
  Propagation result;
  result.table.assign(graph.order, kUnassigned);
  result.table[0] = identity_image;
  std::deque<ElemIndex> queue{0};
  while (!queue.empty()) {
    ElemIndex x = queue.front();
    queue.pop_front();
    ElemIndex image = result.table[x];
    for (std::size_t j = 0; j < used_generators; ++j) {
      ElemIndex y = graph.step(x, j);
      ElemIndex forced = multiply(image, j);
      ElemIndex &slot = result.table[y];
      if (slot == kUnassigned) {
        slot = forced;
        queue.push_back(y);
      } else if (slot != forced) {
        result.conflict = PropagationConflict{y, slot, forced};
        return result;
      }
    }
  }
  return result;
}

} // namespace indep
