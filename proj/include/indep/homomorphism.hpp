#pragma once

#include "indep/cayley.hpp"
#include "indep/group.hpp"
#include "indep/subgroup_pair.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <vector>

namespace indep {

inline constexpr std::size_t kDefaultEndoBudget = 256;

/// A homomorphism given by its full element table, indexed in the
/// canonical order of the domain; entries index the codomain.
class GroupMap {
public:
  GroupMap(GroupPtr domain, GroupPtr codomain, std::vector<ElemIndex> table);

  const FiniteGroup &domain() const noexcept { return *domain_; }
  const FiniteGroup &codomain() const noexcept { return *codomain_; }
  const GroupPtr &domain_ptr() const noexcept { return domain_; }
  std::span<const ElemIndex> table() const noexcept { return table_; }

  /// Image of a domain element; throws std::out_of_range for non-members.
  const Permutation &operator()(const Permutation &x) const;
  const Permutation &image_at(ElemIndex i) const {
    return codomain_->element(table_[i]);
  }

  std::size_t image_size() const;
  bool is_identity() const;
  bool is_trivial() const;

  /// Checks table(xy) = table(x)table(y) over all |G|^2 pairs.
  bool is_homomorphism() const;

  friend bool operator==(const GroupMap &lhs, const GroupMap &rhs) {
    return *lhs.domain_ == *rhs.domain_ && *lhs.codomain_ == *rhs.codomain_ &&
           lhs.table_ == rhs.table_;
  }

private:
  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<ElemIndex> table_;
};

GroupMap identity_map(const GroupPtr &g);
GroupMap trivial_map(const GroupPtr &g);

/// {"(1 2)": "(5 6)", ...} in canonical domain order.
nlohmann::ordered_json to_json(const GroupMap &map);

/// Canonical endomorphism order: larger image first, then lexicographic on
/// the table. The identity comes first and the trivial map last.
bool endomorphism_less(const GroupMap &lhs, const GroupMap &rhs);

struct EndomorphismOptions {
  std::size_t budget = kDefaultEndoBudget;
  int jobs = 0; ///< 0 = OpenMP default
};

/// All endomorphisms of `g`, duplicate free, in canonical endomorphism
/// order. Generator images are restricted to elements whose order divides
/// the generator's order; every candidate is validated on all Cayley edges.
/// Candidates are split across OpenMP workers.
/// Throws BudgetExceeded("endo_budget") when |g| > budget.
std::vector<GroupMap> enumerate_endomorphisms(const GroupPtr &g,
                                              EndomorphismOptions options = {});

/// Single-threaded reference for enumerate_endomorphisms.
std::vector<GroupMap> enumerate_endomorphisms_serial(const GroupPtr &g,
                                                     std::size_t budget = kDefaultEndoBudget);

/// The element of the join that was forced onto two different images.
struct ExtensionConflict {
  Permutation element;
  Permutation first_image;
  Permutation second_image;
};

struct ExtensionResult {
  std::optional<GroupMap> extension; ///< endomorphism of the join
  std::optional<ExtensionConflict> conflict;

  bool exists() const noexcept { return extension.has_value(); }
};

/// Precomputed Cayley data for repeatedly extending endomorphism pairs of
/// (A, B) to their join. Read-only after construction, so one instance can
/// serve many threads.
class Extender {
public:
  explicit Extender(const SubgroupPair &pair);

  ExtensionResult extend(const GroupMap &alpha, const GroupMap &beta) const;

  /// Index-level form used by the brute-force search: tables index A and B
  /// respectively. Returns the conflict, if any.
  std::optional<PropagationConflict>
  find_conflict(std::span<const ElemIndex> alpha, std::span<const ElemIndex> beta) const;

  const FiniteGroup &join() const noexcept { return *join_; }

private:
  Propagation run(std::span<const ElemIndex> alpha,
                  std::span<const ElemIndex> beta) const;

  GroupPtr a_, b_, join_;
  std::vector<ElemIndex> a_in_join_, b_in_join_;
  CayleyGraph graph_;
  /// Per generator of the join graph: side (0 = A, 1 = B) and index in that side.
  std::vector<std::pair<int, ElemIndex>> generator_source_;
  /// right_a_[i * |J| + z] = index of z·a_i in the join; same for B.
  std::vector<ElemIndex> right_a_, right_b_;
};

/// Breadth-first propagation of (alpha, beta) over the join's Cayley graph
/// for the generators of A followed by those of B. Reports the first
/// element that receives two images, or the resulting endomorphism.
ExtensionResult extend(const GroupMap &alpha, const GroupMap &beta,
                       const SubgroupPair &pair);

bool is_compatible(const GroupMap &alpha, const GroupMap &beta,
                   const SubgroupPair &pair);

/// Samples `words` random products a1·b1·…·an·bn over the join (n from 1
/// to 6, letters from A and B) and counts those where
/// gamma(∏ a_i b_i) ≠ ∏ alpha(a_i)·beta(b_i). Deterministic for a seed.
std::size_t product_law_violations(const GroupMap &alpha, const GroupMap &beta,
                                   const GroupMap &gamma, std::size_t words,
                                   std::uint64_t seed);

} // namespace indep
