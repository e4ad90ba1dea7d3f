#include "indep/subgroup_pair.hpp"

#include "indep/error.hpp"

namespace indep {

SubgroupPair::SubgroupPair(FiniteGroup a, FiniteGroup b, std::size_t max_group_order)
    : SubgroupPair(share(std::move(a)), share(std::move(b)), max_group_order) {}

SubgroupPair::SubgroupPair(GroupPtr a, GroupPtr b, std::size_t max_group_order)
    : a_(std::move(a)), b_(std::move(b)), max_order_(max_group_order),
      cache_(std::make_shared<Cache>()) {
  if (a_->degree() != b_->degree())
    throw DegreeMismatch(a_->degree(), b_->degree());
}

const GroupPtr &SubgroupPair::join() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->join)
    cache_->join = share(indep::join(*a_, *b_, max_order_));
  return cache_->join;
}

const GroupPtr &SubgroupPair::ncl_a() const {
  const GroupPtr &j = join();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->ncl_a)
    cache_->ncl_a = share(normal_closure(*a_, *j));
  return cache_->ncl_a;
}

const GroupPtr &SubgroupPair::ncl_b() const {
  const GroupPtr &j = join();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->ncl_b)
    cache_->ncl_b = share(normal_closure(*b_, *j));
  return cache_->ncl_b;
}

} // namespace indep
