#include "indep/independence.hpp"

#include "indep/error.hpp"
#include "indep/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace indep {

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::ProvesDependent:
    return "dependent";
  case Verdict::ProvesIndependent:
    return "independent";
  case Verdict::Inconclusive:
    return "inconclusive";
  }
  return "?";
}

const char *to_string(Side s) { return s == Side::A ? "A" : "B"; }

namespace {

const FiniteGroup &side_group(const SubgroupPair &pair, Side s) {
  return s == Side::A ? pair.a() : pair.b();
}

const FiniteGroup &ncl_of(const SubgroupPair &pair, Side s) {
  return s == Side::A ? *pair.ncl_a() : *pair.ncl_b();
}

bool commute(const Permutation &x, const Permutation &y) {
  return compose(x, y) == compose(y, x);
}

std::optional<Permutation> least_nontrivial_common(const FiniteGroup &x,
                                                   const FiniteGroup &y) {
  const FiniteGroup &small = x.order() <= y.order() ? x : y;
  const FiniteGroup &large = x.order() <= y.order() ? y : x;
  for (const Permutation &p : small.elements().subspan(1))
    if (large.contains(p))
      return p;
  return std::nullopt;
}

std::optional<witness::NonNormal> non_normal_witness(const FiniteGroup &h, Side side,
                                                     const FiniteGroup &g) {
  for (const Permutation &x : g.generators())
    for (const Permutation &y : h.generators()) {
      Permutation c = conjugate(y, x);
      if (!h.contains(c))
        return witness::NonNormal{side, x, y, c};
    }
  return std::nullopt;
}

// Express `target` ∈ <Conj(S)> (closure in `join`) as a product of
// join-conjugates of S's generators by breadth-first search.
std::vector<witness::ConjugateFactor> conjugate_word(const Permutation &target,
                                                     const FiniteGroup &s,
                                                     const FiniteGroup &join) {
  std::vector<witness::ConjugateFactor> letters;
  std::vector<Permutation> values;
  for (const Permutation &gen : s.generators()) {
    if (gen.is_identity())
      continue;
    for (const Permutation &z : join.elements()) {
      Permutation c = conjugate(gen, z);
      if (std::find(values.begin(), values.end(), c) == values.end()) {
        values.push_back(c);
        letters.push_back({z, gen});
      }
    }
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(join.order(), kNone), via(join.order(), kNone);
  std::vector<ElemIndex> queue{0};
  parent[0] = 0;
  ElemIndex goal = join.at(target);
  for (std::size_t head = 0; head < queue.size() && parent[goal] == kNone; ++head) {
    ElemIndex x = queue[head];
    for (std::size_t l = 0; l < values.size(); ++l) {
      ElemIndex y = join.at(compose(join.element(x), values[l]));
      if (parent[y] == kNone) {
        parent[y] = x;
        via[y] = l;
        queue.push_back(y);
      }
    }
  }
  if (parent[goal] == kNone)
    throw std::logic_error("conjugate_word: element is not in the normal closure");
  std::vector<witness::ConjugateFactor> word;
  for (ElemIndex x = goal; x != 0; x = static_cast<ElemIndex>(parent[x]))
    word.push_back(letters[via[x]]);
  std::reverse(word.begin(), word.end());
  return word;
}

} // namespace

CheckOutcome check_almost_disjoint(const SubgroupPair &pair) {
  if (auto x = least_nontrivial_common(pair.a(), pair.b()))
    return CheckOutcome::dependent(witness::Intersection{*x});
  return CheckOutcome::inconclusive();
}

CommutingCheck check_commuting(const SubgroupPair &pair) {
  CommutingCheck result;
  bool generators_commute = true;
  for (const Permutation &a : pair.a().generators())
    for (const Permutation &b : pair.b().generators())
      generators_commute = generators_commute && commute(a, b);
  if (generators_commute) {
    if (!least_nontrivial_common(pair.a(), pair.b()))
      result.outcome = CheckOutcome::independent(
          witness::AllCommute{pair.a().order(), pair.b().order()});
    return result;
  }
  for (const Permutation &a : pair.a().elements())
    for (const Permutation &b : pair.b().elements())
      if (!commute(a, b)) {
        result.first_noncommuting = ElementPair{a, b};
        return result;
      }
  return result;
}

std::vector<ElementPair> noncommuting_pairs(const SubgroupPair &pair) {
  std::vector<ElementPair> out;
  for (const Permutation &a : pair.a().elements())
    for (const Permutation &b : pair.b().elements())
      if (!commute(a, b))
        out.emplace_back(a, b);
  return out;
}

namespace {

std::optional<witness::OrderViolation> order_violation(const Permutation &a,
                                                       const Permutation &b) {
  Permutation ab = compose(a, b);
  if (ab == compose(b, a))
    return std::nullopt;
  std::uint64_t oa = element_order(a), ob = element_order(b), oab = element_order(ab);
  if (oab % oa != 0 || oab % ob != 0)
    return witness::OrderViolation{a, b, std::move(ab), oa, ob, oab};
  return std::nullopt;
}

} // namespace

CheckOutcome check_order_divisibility(std::span<const ElementPair> noncommuting) {
  for (const auto &[a, b] : noncommuting)
    if (auto w = order_violation(a, b))
      return CheckOutcome::dependent(std::move(*w));
  return CheckOutcome::inconclusive();
}

CheckOutcome check_order_divisibility(const SubgroupPair &pair) {
  for (const Permutation &a : pair.a().elements())
    for (const Permutation &b : pair.b().elements())
      if (auto w = order_violation(a, b))
        return CheckOutcome::dependent(std::move(*w));
  return CheckOutcome::inconclusive();
}

CheckOutcome check_separated_side(const SubgroupPair &pair, Side closure_of) {
  Side element_side = other(closure_of);
  const FiniteGroup &closure = ncl_of(pair, closure_of);
  auto x = least_nontrivial_common(side_group(pair, element_side), closure);
  if (!x)
    return CheckOutcome::inconclusive();
  auto word = conjugate_word(*x, side_group(pair, closure_of), *pair.join());
  return CheckOutcome::dependent(witness::Separation{element_side, *x, std::move(word)});
}

CheckOutcome check_separated(const SubgroupPair &pair) {
  auto outcome = check_separated_side(pair, Side::B);
  if (outcome.decisive())
    return outcome;
  return check_separated_side(pair, Side::A);
}

CheckOutcome check_conjugacy_merge_side(const SubgroupPair &pair, Side side) {
  const FiniteGroup &h = side_group(pair, side);
  const FiniteGroup &j = *pair.join();
  auto h_classes = conjugacy_classes(h);
  auto j_classes = conjugacy_classes(j);
  std::vector<std::size_t> j_class_of(h.order());
  std::map<std::size_t, std::vector<ElemIndex>> members;
  for (ElemIndex i = 0; i < h.order(); ++i) {
    j_class_of[i] = j_classes.class_of[j.at(h.element(i))];
    members[j_class_of[i]].push_back(i);
  }
  for (ElemIndex x1 = 0; x1 < h.order(); ++x1) {
    for (ElemIndex x2 : members[j_class_of[x1]]) {
      if (x2 <= x1 || h_classes.same_class(x1, x2))
        continue;
      const Permutation &p1 = h.element(x1);
      const Permutation &p2 = h.element(x2);
      for (const Permutation &z : j.elements())
        if (conjugate(p2, z) == p1)
          return CheckOutcome::dependent(witness::ConjugacyMerge{side, p1, p2, z});
    }
  }
  return CheckOutcome::inconclusive();
}

CheckOutcome check_conjugacy_merge(const SubgroupPair &pair) {
  auto outcome = check_conjugacy_merge_side(pair, Side::A);
  if (outcome.decisive())
    return outcome;
  return check_conjugacy_merge_side(pair, Side::B);
}

CheckOutcome check_normal_asymmetry(const SubgroupPair &pair) {
  const FiniteGroup &j = *pair.join();
  auto a_bad = non_normal_witness(pair.a(), Side::A, j);
  auto b_bad = non_normal_witness(pair.b(), Side::B, j);
  bool a_normal = !a_bad, b_normal = !b_bad;
  if (a_normal != b_normal)
    return CheckOutcome::dependent(
        witness::Normality{a_normal, b_normal, a_normal ? b_bad : a_bad});
  if (a_normal && b_normal && !least_nontrivial_common(pair.a(), pair.b()))
    return CheckOutcome::independent(witness::Normality{true, true, std::nullopt});
  return CheckOutcome::inconclusive();
}

namespace {

// Beyond this many endomorphism pairs the exhaustive search is refused.
constexpr std::size_t kMaxEndomorphismPairs = std::size_t{1} << 26;

class PairSearch {
public:
  PairSearch(const SubgroupPair &pair, std::span<const GroupMap> endo_a,
             std::span<const GroupMap> endo_b, bool skip_certified,
             std::size_t endo_budget)
      : extender_(pair), endo_a_(endo_a), endo_b_(endo_b) {
    if (endo_a.empty() || endo_b.empty())
      throw std::invalid_argument("endomorphism lists must not be empty");
    if (endo_a.size() > kMaxEndomorphismPairs / endo_b.size())
      throw BudgetExceeded("endo_budget", endo_budget);
    for (const auto &m : endo_a) {
      a_id_.push_back(m.is_identity());
      a_triv_.push_back(m.is_trivial());
    }
    for (const auto &m : endo_b) {
      b_id_.push_back(m.is_identity());
      b_triv_.push_back(m.is_trivial());
    }
    if (skip_certified) {
      skip_ = true;
      a_separated_ = !least_nontrivial_common(pair.a(), *pair.ncl_b());
      b_separated_ = !least_nontrivial_common(pair.b(), *pair.ncl_a());
    }
  }

  std::size_t total() const { return endo_a_.size() * endo_b_.size(); }

  bool skipped(std::size_t p) const {
    if (!skip_)
      return false;
    std::size_t i = p / endo_b_.size(), j = p % endo_b_.size();
    return (a_id_[i] && b_id_[j]) || (a_triv_[i] && b_triv_[j]) ||
           (a_id_[i] && b_triv_[j] && a_separated_) ||
           (a_triv_[i] && b_id_[j] && b_separated_);
  }

  bool fails(std::size_t p) const {
    std::size_t i = p / endo_b_.size(), j = p % endo_b_.size();
    return extender_.find_conflict(endo_a_[i].table(), endo_b_[j].table()).has_value();
  }

  std::size_t skipped_count() const {
    std::size_t n = 0;
    for (std::size_t p = 0; p < total(); ++p)
      n += skipped(p);
    return n;
  }

  CheckOutcome result(std::size_t failing) const {
    if (failing >= total())
      return CheckOutcome::independent(witness::Exhaustive{
          endo_a_.size(), endo_b_.size(), total() - skipped_count(), skipped_count()});
    std::size_t i = failing / endo_b_.size(), j = failing % endo_b_.size();
    auto ext = extender_.extend(endo_a_[i], endo_b_[j]);
    return CheckOutcome::dependent(witness::IncompatiblePair{
        endo_a_[i], endo_b_[j], *ext.conflict, failing, endo_a_.size(), endo_b_.size()});
  }

private:
  Extender extender_;
  std::span<const GroupMap> endo_a_, endo_b_;
  std::vector<bool> a_id_, a_triv_, b_id_, b_triv_;
  bool skip_ = false;
  bool a_separated_ = false;
  bool b_separated_ = false;
};

CheckOutcome budget_outcome(const BudgetExceeded &e) {
  CheckOutcome out;
  out.budget = e.budget();
  return out;
}

} // namespace

CheckOutcome brute_force_independent_serial(const SubgroupPair &pair,
                                            std::span<const GroupMap> endo_a,
                                            std::span<const GroupMap> endo_b,
                                            bool skip_certified) {
  try {
    PairSearch search(pair, endo_a, endo_b, skip_certified, kDefaultEndoBudget);
    std::size_t p = 0;
    for (; p < search.total(); ++p)
      if (!search.skipped(p) && search.fails(p))
        break;
    return search.result(p);
  } catch (const BudgetExceeded &e) {
    return budget_outcome(e);
  }
}

CheckOutcome brute_force_independent(const SubgroupPair &pair,
                                     std::span<const GroupMap> endo_a,
                                     std::span<const GroupMap> endo_b,
                                     BruteForceOptions options) {
  try {
    PairSearch search(pair, endo_a, endo_b, options.skip_certified, options.endo_budget);
    const auto total = static_cast<std::int64_t>(search.total());
    std::atomic<std::size_t> first_failure{search.total()};
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_jobs(options.jobs)) \
    if (total > 64)
    for (std::int64_t p = 0; p < total; ++p) {
      auto idx = static_cast<std::size_t>(p);
      if (idx >= first_failure.load(std::memory_order_relaxed) || search.skipped(idx))
        continue;
      if (search.fails(idx)) {
        std::size_t seen = first_failure.load();
        while (idx < seen && !first_failure.compare_exchange_weak(seen, idx)) {
        }
      }
    }
    return search.result(first_failure.load());
  } catch (const BudgetExceeded &e) {
    return budget_outcome(e);
  }
}

CheckOutcome brute_force_independent(const SubgroupPair &pair, BruteForceOptions options) {
  try {
    EndomorphismOptions eo{options.endo_budget, options.jobs};
    auto endo_a = enumerate_endomorphisms(pair.a_ptr(), eo);
    auto endo_b = enumerate_endomorphisms(pair.b_ptr(), eo);
    return brute_force_independent(pair, endo_a, endo_b, options);
  } catch (const BudgetExceeded &e) {
    return budget_outcome(e);
  }
}

bool is_separated_pair(const Permutation &a, const Permutation &b, const FiniteGroup &join) {
  auto ncl = [&](const Permutation &x) {
    return normal_closure(closure({x}, join.degree(), join.order()), join);
  };
  bool a_ok = a.is_identity() || !ncl(b).contains(a);
  bool b_ok = b.is_identity() || !ncl(a).contains(b);
  return a_ok && b_ok;
}

FactoringReport verify_factoring(const SubgroupPair &pair, std::size_t iso_budget) {
  const FiniteGroup &j = *pair.join();
  FactoringReport report;
  report.join_mod_ncl_b_iso_a =
      is_isomorphic(quotient(j, *pair.ncl_b()).group, pair.a(), iso_budget).isomorphic;
  report.join_mod_ncl_a_iso_b =
      is_isomorphic(quotient(j, *pair.ncl_a()).group, pair.b(), iso_budget).isomorphic;
  return report;
}

bool is_independent_set(std::span<const Permutation> set, const FiniteGroup &g) {
  std::vector<Permutation> members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const Permutation &x : members)
    if (!g.contains(x))
      throw std::invalid_argument("is_independent_set: " + format(x) + " is not in G");
  for (std::size_t k = 0; k < members.size(); ++k) {
    std::vector<Permutation> others;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (i != k)
        others.push_back(members[i]);
    if (closure(std::move(others), g.degree(), g.order()).contains(members[k]))
      return false;
  }
  return true;
}

bool check_union_independent_sets(const SubgroupPair &pair,
                                  std::span<const Permutation> a_subset,
                                  std::span<const Permutation> b_subset) {
  std::vector<Permutation> all(a_subset.begin(), a_subset.end());
  all.insert(all.end(), b_subset.begin(), b_subset.end());
  return is_independent_set(all, *pair.join());
}

namespace {

struct Rechecker {
  const SubgroupPair &pair;
  Verdict verdict;

  bool operator()(const witness::Intersection &w) const {
    return verdict == Verdict::ProvesDependent && !w.element.is_identity() &&
           pair.a().contains(w.element) && pair.b().contains(w.element);
  }

  bool operator()(const witness::AllCommute &) const {
    if (verdict != Verdict::ProvesIndependent)
      return false;
    for (const Permutation &a : pair.a().elements())
      for (const Permutation &b : pair.b().elements())
        if (!commute(a, b) || (a == b && !a.is_identity()))
          return false;
    return true;
  }

  bool operator()(const witness::OrderViolation &w) const {
    if (verdict != Verdict::ProvesDependent || !pair.a().contains(w.a) ||
        !pair.b().contains(w.b))
      return false;
    auto recomputed = order_violation(w.a, w.b);
    return recomputed && recomputed->ab == w.ab && recomputed->order_a == w.order_a &&
           recomputed->order_b == w.order_b && recomputed->order_ab == w.order_ab;
  }

  bool operator()(const witness::Separation &w) const {
    const FiniteGroup &holder = side_group(pair, w.element_side);
    const FiniteGroup &source = side_group(pair, other(w.element_side));
    const FiniteGroup &j = *pair.join();
    if (verdict != Verdict::ProvesDependent || w.element.is_identity() ||
        !holder.contains(w.element))
      return false;
    Permutation product(pair.degree());
    for (const auto &f : w.word) {
      if (!source.contains(f.factor) || !j.contains(f.conjugator))
        return false;
      product = compose(product, conjugate(f.factor, f.conjugator));
    }
    return product == w.element;
  }

  bool operator()(const witness::ConjugacyMerge &w) const {
    const FiniteGroup &h = side_group(pair, w.side);
    if (verdict != Verdict::ProvesDependent || !h.contains(w.x1) || !h.contains(w.x2) ||
        !pair.join()->contains(w.conjugator) || conjugate(w.x2, w.conjugator) != w.x1)
      return false;
    for (const Permutation &z : h.elements())
      if (conjugate(w.x2, z) == w.x1)
        return false;
    return true;
  }

  bool operator()(const witness::Normality &w) const {
    const FiniteGroup &j = *pair.join();
    bool a_normal = is_normal_in(pair.a(), j);
    bool b_normal = is_normal_in(pair.b(), j);
    if (a_normal != w.a_normal || b_normal != w.b_normal)
      return false;
    if (verdict == Verdict::ProvesIndependent)
      return a_normal && b_normal && !least_nontrivial_common(pair.a(), pair.b());
    if (verdict != Verdict::ProvesDependent || a_normal == b_normal || !w.non_normal)
      return false;
    const auto &nn = *w.non_normal;
    const FiniteGroup &h = side_group(pair, nn.side);
    return nn.side == (a_normal ? Side::B : Side::A) && j.contains(nn.conjugator) &&
           h.contains(nn.element) && conjugate(nn.element, nn.conjugator) == nn.conjugate &&
           !h.contains(nn.conjugate);
  }

  bool operator()(const witness::Exhaustive &w) const {
    if (verdict != Verdict::ProvesIndependent)
      return false;
    auto rerun = brute_force_independent(pair, BruteForceOptions{.skip_certified = false});
    const auto *ex = rerun.witness ? std::get_if<witness::Exhaustive>(&*rerun.witness) : nullptr;
    return rerun.verdict == Verdict::ProvesIndependent && ex && ex->endo_a == w.endo_a &&
           ex->endo_b == w.endo_b;
  }

  bool operator()(const witness::IncompatiblePair &w) const {
    if (verdict != Verdict::ProvesDependent || !(w.alpha.domain() == pair.a()) ||
        !(w.beta.domain() == pair.b()) || !w.alpha.is_homomorphism() ||
        !w.beta.is_homomorphism())
      return false;
    auto ext = extend(w.alpha, w.beta, pair);
    return !ext.exists() && ext.conflict->element == w.conflict.element &&
           ext.conflict->first_image == w.conflict.first_image &&
           ext.conflict->second_image == w.conflict.second_image;
  }
};

} // namespace

bool recheck(const SubgroupPair &pair, const CheckOutcome &outcome) {
  if (!outcome.decisive())
    return !outcome.witness.has_value();
  if (!outcome.witness)
    return false;
  return std::visit(Rechecker{pair, outcome.verdict}, *outcome.witness);
}

namespace {

struct ToJson {
  using json = nlohmann::ordered_json;

  json operator()(const witness::Intersection &w) const {
    return {{"kind", "intersection"}, {"element", format(w.element)}};
  }
  json operator()(const witness::AllCommute &w) const {
    return {{"kind", "all_commute"}, {"order_a", w.order_a}, {"order_b", w.order_b}};
  }
  json operator()(const witness::OrderViolation &w) const {
    return {{"kind", "order_violation"}, {"a", format(w.a)},     {"b", format(w.b)},
            {"ab", format(w.ab)},        {"order_a", w.order_a}, {"order_b", w.order_b},
            {"order_ab", w.order_ab}};
  }
  json operator()(const witness::Separation &w) const {
    json word = json::array();
    for (const auto &f : w.word)
      word.push_back({{"conjugator", format(f.conjugator)}, {"factor", format(f.factor)}});
    return {{"kind", "separation"},
            {"element_side", to_string(w.element_side)},
            {"element", format(w.element)},
            {"normal_closure_of", to_string(other(w.element_side))},
            {"word", std::move(word)}};
  }
  json operator()(const witness::ConjugacyMerge &w) const {
    return {{"kind", "conjugacy_merge"},
            {"side", to_string(w.side)},
            {"x1", format(w.x1)},
            {"x2", format(w.x2)},
            {"conjugator", format(w.conjugator)}};
  }
  json operator()(const witness::Normality &w) const {
    json nn = nullptr;
    if (w.non_normal)
      nn = {{"side", to_string(w.non_normal->side)},
            {"conjugator", format(w.non_normal->conjugator)},
            {"element", format(w.non_normal->element)},
            {"conjugate", format(w.non_normal->conjugate)}};
    return {{"kind", "normality"},
            {"a_normal", w.a_normal},
            {"b_normal", w.b_normal},
            {"non_normal", std::move(nn)}};
  }
  json operator()(const witness::Exhaustive &w) const {
    return {{"kind", "exhaustive"},
            {"endo_a", w.endo_a},
            {"endo_b", w.endo_b},
            {"pairs_checked", w.pairs_checked},
            {"pairs_skipped", w.pairs_skipped}};
  }
  json operator()(const witness::IncompatiblePair &w) const {
    return {{"kind", "incompatible_pair"},
            {"alpha", to_json(w.alpha)},
            {"beta", to_json(w.beta)},
            {"conflict",
             {{"element", format(w.conflict.element)},
              {"first_image", format(w.conflict.first_image)},
              {"second_image", format(w.conflict.second_image)}}},
            {"pair_index", w.pair_index}};
  }
};

std::string conjugate_text(const witness::ConjugateFactor &f) {
  if (f.conjugator.is_identity())
    return format(f.factor);
  return format(f.conjugator) + format(f.factor) + format(f.conjugator) + "^-1";
}

std::string map_text(const GroupMap &m) {
  std::string out = "{";
  for (ElemIndex i = 0; i < m.domain().order(); ++i) {
    if (i)
      out += ", ";
    out += format(m.domain().element(i)) + " -> " + format(m.image_at(i));
  }
  return out + "}";
}

struct Describe {
  std::string operator()(const witness::Intersection &w) const {
    return format(w.element) + " lies in both A and B";
  }
  std::string operator()(const witness::AllCommute &) const {
    return "every element of A commutes with every element of B";
  }
  std::string operator()(const witness::OrderViolation &w) const {
    std::ostringstream os;
    os << "a = " << format(w.a) << ", b = " << format(w.b) << ", ab = " << format(w.ab)
       << ": |a| = " << w.order_a << ", |b| = " << w.order_b << ", |ab| = " << w.order_ab;
    return os.str();
  }
  std::string operator()(const witness::Separation &w) const {
    std::string word;
    for (const auto &f : w.word)
      word += (word.empty() ? "" : " * ") + conjugate_text(f);
    return format(w.element) + " = " + word + " lies in " + to_string(w.element_side) +
           " and in <Conj(" + to_string(other(w.element_side)) + ")>";
  }
  std::string operator()(const witness::ConjugacyMerge &w) const {
    return format(w.x1) + " and " + format(w.x2) + " are not conjugate in " +
           to_string(w.side) + " but " + format(w.x1) + " = " + format(w.conjugator) +
           format(w.x2) + format(w.conjugator) + "^-1 in the join";
  }
  std::string operator()(const witness::Normality &w) const {
    if (!w.non_normal)
      return "A and B are both normal in their join and A ∩ B = {e}";
    const auto &nn = *w.non_normal;
    return std::string(to_string(other(nn.side))) + " is normal in the join but " +
           to_string(nn.side) + " is not: " + format(nn.conjugator) + format(nn.element) +
           format(nn.conjugator) + "^-1 = " + format(nn.conjugate);
  }
  std::string operator()(const witness::Exhaustive &w) const {
    std::ostringstream os;
    os << "all " << w.endo_a * w.endo_b << " endomorphism pairs extend (" << w.endo_a
       << " x " << w.endo_b << ", " << w.pairs_skipped << " known compatible)";
    return os.str();
  }
  std::string operator()(const witness::IncompatiblePair &w) const {
    return "alpha = " + map_text(w.alpha) + ", beta = " + map_text(w.beta) +
           " do not extend: " + format(w.conflict.element) + " is forced to both " +
           format(w.conflict.first_image) + " and " + format(w.conflict.second_image);
  }
};

} // namespace

nlohmann::ordered_json to_json(const Witness &w) { return std::visit(ToJson{}, w); }

std::string describe(const Witness &w) { return std::visit(Describe{}, w); }

} // namespace indep
