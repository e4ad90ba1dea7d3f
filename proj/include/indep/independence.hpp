#pragma once

// Theorem-backed decision checks for a pair of subgroups (A, B).
//
// Each check is a pure function of the pair. A check either proves a
// verdict, carrying a witness that `recheck` can verify independently, or
// is inconclusive. Dependence detectors: nontrivial intersection, order
// non-divisibility on a non-commuting pair, failure of separatedness
// (A ∩ <Conj(B)> or B ∩ <Conj(A)> nontrivial), merged conjugacy classes,
// and normality in the join on exactly one side. Independence detectors:
// elementwise commuting of almost disjoint subgroups, both normal and
// almost disjoint, and the exhaustive endomorphism-pair search.

#include "indep/homomorphism.hpp"
#include "indep/subgroup_pair.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace indep {

enum class Verdict { ProvesDependent, ProvesIndependent, Inconclusive };
enum class Side { A, B };

const char *to_string(Verdict v);
const char *to_string(Side s);
inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }

namespace witness {

/// A nonidentity element of A ∩ B.
struct Intersection {
  Permutation element;
};

/// Every a in A commutes with every b in B (and A ∩ B = {e}).
struct AllCommute {
  std::size_t order_a;
  std::size_t order_b;
};

/// A non-commuting pair with |a| ∤ |ab| or |b| ∤ |ab|.
struct OrderViolation {
  Permutation a, b, ab;
  std::uint64_t order_a, order_b, order_ab;
};

/// conjugator · factor · conjugator⁻¹
struct ConjugateFactor {
  Permutation conjugator;
  Permutation factor;
};

/// `element` of side `element_side` lies in the normal closure of the other
/// side: element = ∏ word[i] (left to right), each factor a generator of
/// the other side conjugated by an element of the join.
struct Separation {
  Side element_side;
  Permutation element;
  std::vector<ConjugateFactor> word;
};

/// x1, x2 in `side` are not conjugate there, yet x1 = z·x2·z⁻¹ in the join.
struct ConjugacyMerge {
  Side side;
  Permutation x1, x2, conjugator;
};

/// g·h·g⁻¹ ∉ H for a generator h of the non-normal side.
struct NonNormal {
  Side side;
  Permutation conjugator, element, conjugate;
};

struct Normality {
  bool a_normal;
  bool b_normal;
  std::optional<NonNormal> non_normal;
};

/// Every endomorphism pair was found compatible.
struct Exhaustive {
  std::size_t endo_a;
  std::size_t endo_b;
  std::size_t pairs_checked;
  std::size_t pairs_skipped;
};

/// The lowest-index endomorphism pair that does not extend to the join.
struct IncompatiblePair {
  GroupMap alpha;
  GroupMap beta;
  ExtensionConflict conflict;
  std::size_t pair_index;
  std::size_t endo_a;
  std::size_t endo_b;
};

} // namespace witness

using Witness =
    std::variant<witness::Intersection, witness::AllCommute, witness::OrderViolation,
                 witness::Separation, witness::ConjugacyMerge, witness::Normality,
                 witness::Exhaustive, witness::IncompatiblePair>;

struct CheckOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness; ///< present iff verdict is decisive
  std::string budget;             ///< set when a budget stopped the check

  static CheckOutcome inconclusive() { return {}; }
  static CheckOutcome dependent(Witness w) {
    return {Verdict::ProvesDependent, std::move(w), {}};
  }
  static CheckOutcome independent(Witness w) {
    return {Verdict::ProvesIndependent, std::move(w), {}};
  }
  bool decisive() const noexcept { return verdict != Verdict::Inconclusive; }
};

using ElementPair = std::pair<Permutation, Permutation>;

/// Step 1. Least nonidentity element of A ∩ B, if any.
CheckOutcome check_almost_disjoint(const SubgroupPair &pair);

struct CommutingCheck {
  CheckOutcome outcome;
  std::optional<ElementPair> first_noncommuting;
};

/// Step 2(i). Independent when A ∩ B = {e} and all cross pairs commute.
/// Inconclusive (never a proof) if A ∩ B is nontrivial.
CommutingCheck check_commuting(const SubgroupPair &pair);

/// All (a, b) with ab ≠ ba, a-major in canonical order.
std::vector<ElementPair> noncommuting_pairs(const SubgroupPair &pair);

/// Step 2(ii) over the given non-commuting pairs, first offender wins.
CheckOutcome check_order_divisibility(std::span<const ElementPair> noncommuting);
/// Step 2(ii) streaming over every non-commuting pair of the subgroups.
CheckOutcome check_order_divisibility(const SubgroupPair &pair);

/// One half of step 3: is the other side disjoint (apart from e) from the
/// normal closure of `closure_of`? closure_of = A is step 3(i),
/// closure_of = B is step 3(ii).
CheckOutcome check_separated_side(const SubgroupPair &pair, Side closure_of);
/// Both halves: A ∩ <Conj(B)> first, then B ∩ <Conj(A)>.
CheckOutcome check_separated(const SubgroupPair &pair);

/// Step 3(iii) for side A, 3(iv) for side B.
CheckOutcome check_conjugacy_merge_side(const SubgroupPair &pair, Side side);
CheckOutcome check_conjugacy_merge(const SubgroupPair &pair);

/// Exactly one side normal in the join: dependent. Both normal and
/// A ∩ B = {e}: independent.
CheckOutcome check_normal_asymmetry(const SubgroupPair &pair);

struct BruteForceOptions {
  std::size_t endo_budget = kDefaultEndoBudget;
  int jobs = 0;
  /// Skip (id,id), (triv,triv), and (id,triv) / (triv,id) when the
  /// corresponding separatedness holds, since those are known compatible.
  bool skip_certified = true;
};

/// The definition itself: every (α, β) ∈ End(A) × End(B) must extend to
/// the join. Pairs are indexed α-major in canonical endomorphism order and
/// the lowest failing index is reported regardless of worker count. Budget
/// trips give Inconclusive with `budget` set.
CheckOutcome brute_force_independent(const SubgroupPair &pair,
                                     BruteForceOptions options = {});
/// Same search over precomputed endomorphism lists.
CheckOutcome brute_force_independent(const SubgroupPair &pair,
                                     std::span<const GroupMap> endo_a,
                                     std::span<const GroupMap> endo_b,
                                     BruteForceOptions options = {});
/// Single-threaded reference implementation.
CheckOutcome brute_force_independent_serial(const SubgroupPair &pair,
                                            std::span<const GroupMap> endo_a,
                                            std::span<const GroupMap> endo_b,
                                            bool skip_certified = true);

/// (a ∉ <Conj{b}> or a = e) and (b ∉ <Conj{a}> or b = e), closures in `join`.
bool is_separated_pair(const Permutation &a, const Permutation &b,
                       const FiniteGroup &join);

struct FactoringReport {
  bool join_mod_ncl_b_iso_a = false;
  bool join_mod_ncl_a_iso_b = false;

  bool holds() const noexcept { return join_mod_ncl_b_iso_a && join_mod_ncl_a_iso_b; }
  explicit operator bool() const noexcept { return holds(); }
};

/// Checks <A∪B>/<Conj(B)> ≅ A and <A∪B>/<Conj(A)> ≅ B. Diagnostic only.
FactoringReport verify_factoring(const SubgroupPair &pair,
                                 std::size_t iso_budget = kDefaultIsoBudget);

/// No member of `set` lies in the subgroup generated by the others. The
/// identity is always generated (by the empty product).
bool is_independent_set(std::span<const Permutation> set, const FiniteGroup &g);

/// is_independent_set(A' ∪ B', join). For independent pairs and
/// independent A' ⊆ A, B' ⊆ B this must hold.
bool check_union_independent_sets(const SubgroupPair &pair,
                                  std::span<const Permutation> a_subset,
                                  std::span<const Permutation> b_subset);

/// Re-evaluates the predicate cited by a decisive outcome's witness from
/// scratch. Returns false for inconsistent or forged certificates.
bool recheck(const SubgroupPair &pair, const CheckOutcome &outcome);

nlohmann::ordered_json to_json(const Witness &w);
/// One-line human-readable rendering of a witness.
std::string describe(const Witness &w);

} // namespace indep
