#pragma once

#include "indep/group.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace indep {

/// Two subgroups of a common symmetric group together with lazily computed
/// join and normal closures. Copies share the cache; every accessor is safe
/// to call concurrently.
class SubgroupPair {
public:
  SubgroupPair(FiniteGroup a, FiniteGroup b,
               std::size_t max_group_order = kDefaultMaxGroupOrder);
  SubgroupPair(GroupPtr a, GroupPtr b,
               std::size_t max_group_order = kDefaultMaxGroupOrder);

  const FiniteGroup &a() const noexcept { return *a_; }
  const FiniteGroup &b() const noexcept { return *b_; }
  const GroupPtr &a_ptr() const noexcept { return a_; }
  const GroupPtr &b_ptr() const noexcept { return b_; }
  std::size_t degree() const noexcept { return a_->degree(); }
  std::size_t max_group_order() const noexcept { return max_order_; }

  /// <A ∪ B>. Throws BudgetExceeded("max_group_order").
  const GroupPtr &join() const;
  /// <Conj(A)> and <Conj(B)>, normal closures in the join.
  const GroupPtr &ncl_a() const;
  const GroupPtr &ncl_b() const;

  /// The pair with the roles of A and B exchanged (fresh cache).
  SubgroupPair swapped() const { return {b_, a_, max_order_}; }

private:
  struct Cache {
    std::mutex mutex;
    GroupPtr join, ncl_a, ncl_b;
  };

  GroupPtr a_, b_;
  std::size_t max_order_;
  std::shared_ptr<Cache> cache_;
};

} // namespace indep
