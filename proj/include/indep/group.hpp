#pragma once

#include "indep/perm.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace indep {

using ElemIndex = std::uint32_t;

inline constexpr std::size_t kDefaultMaxGroupOrder = 5040;
inline constexpr std::size_t kDefaultIsoBudget = 512;

/// A finite permutation group held as its full, canonically sorted element
/// list. Element 0 is always the identity. Immutable after construction.
class FiniteGroup {
public:
  /// Closure of `generators`. Throws BudgetExceeded("max_group_order") as
  /// soon as the group would grow past `max_order` elements.
  static FiniteGroup generated_by(std::vector<Permutation> generators,
                                  std::size_t degree,
                                  std::size_t max_order = kDefaultMaxGroupOrder);

  /// Wraps an element set that is already known to be a group. A small
  /// generating set is picked from it.
  static FiniteGroup from_elements(std::size_t degree,
                                   std::vector<Permutation> elements);

  static FiniteGroup trivial(std::size_t degree);
  static FiniteGroup symmetric(std::size_t n);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  std::span<const Permutation> elements() const noexcept { return elements_; }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  const Permutation &element(std::size_t i) const { return elements_[i]; }
  const Permutation &identity() const noexcept { return elements_.front(); }

  /// Binary search in canonical order.
  std::optional<ElemIndex> index_of(const Permutation &p) const;
  bool contains(const Permutation &p) const { return index_of(p).has_value(); }
  /// Like index_of, but throws std::out_of_range for non-members.
  ElemIndex at(const Permutation &p) const;

  bool is_subset_of(const FiniteGroup &other) const;
  bool is_abelian() const;

  /// Same degree and same element set; generators are not compared.
  friend bool operator==(const FiniteGroup &lhs, const FiniteGroup &rhs) {
    return lhs.degree_ == rhs.degree_ && lhs.elements_ == rhs.elements_;
  }

private:
  FiniteGroup(std::size_t degree, std::vector<Permutation> elements,
              std::vector<Permutation> generators);

  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

FiniteGroup closure(std::vector<Permutation> generators, std::size_t degree,
                    std::size_t max_order = kDefaultMaxGroupOrder);

/// <A ∪ B>.
FiniteGroup join(const FiniteGroup &a, const FiniteGroup &b,
                 std::size_t max_order = kDefaultMaxGroupOrder);

/// Smallest normal subgroup of `g` containing `s` (requires s ⊆ g).
FiniteGroup normal_closure(const FiniteGroup &s, const FiniteGroup &g);

FiniteGroup intersection(const FiniteGroup &a, const FiniteGroup &b);

/// True iff h g h^-1 stays in `h_group` for every generator pair.
bool is_normal_in(const FiniteGroup &h_group, const FiniteGroup &g);

/// The set product X·Y = {xy}, canonically sorted and deduplicated.
std::vector<Permutation> product_set(std::span<const Permutation> x,
                                     std::span<const Permutation> y);

struct ConjClassPartition {
  /// Element indices of the group, each class sorted; classes ordered by
  /// their least element.
  std::vector<std::vector<ElemIndex>> classes;
  /// class_of[i] is the class containing element i.
  std::vector<std::size_t> class_of;

  bool same_class(ElemIndex x, ElemIndex y) const {
    return class_of[x] == class_of[y];
  }
};

ConjClassPartition conjugacy_classes(const FiniteGroup &g);

/// G/N realised as the permutation group induced by G acting on the left
/// cosets of N. Its degree is the index [G:N].
struct QuotientGroup {
  FiniteGroup group;
  /// Least element of each coset, in the order used to number the cosets.
  std::vector<Permutation> representatives;
  /// coset_of[i] is the coset of element i of G.
  std::vector<std::size_t> coset_of;
};

/// Throws std::invalid_argument when N is not a normal subgroup of G.
QuotientGroup quotient(const FiniteGroup &g, const FiniteGroup &n);

struct IsomorphismResult {
  bool isomorphic = false;
  /// When isomorphic: witness[i] is the index in H of the image of element
  /// i of G.
  std::vector<ElemIndex> witness;

  explicit operator bool() const noexcept { return isomorphic; }
};

/// Exact isomorphism test. Invariants (order, element-order multiset,
/// abelianness, class sizes) are compared first; then generator images are
/// searched and each assignment is checked against every Cayley edge.
/// Throws BudgetExceeded("iso_budget") if either order exceeds `budget`.
IsomorphismResult is_isomorphic(const FiniteGroup &g, const FiniteGroup &h,
                                std::size_t budget = kDefaultIsoBudget);

/// Greedy small generating set: repeatedly add the element whose addition
/// yields the largest subgroup, ties broken by canonical order.
std::vector<ElemIndex> greedy_generating_set(const FiniteGroup &g);

} // namespace indep
