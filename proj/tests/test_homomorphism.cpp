#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indep/atlas.hpp"
#include "indep/error.hpp"
#include "indep/homomorphism.hpp"
#include "support.hpp"

using namespace indep;
using testing_support::G;
using testing_support::P;

namespace {

GroupPtr SG(const std::vector<std::string> &gens, std::size_t degree) {
  return share(G(gens, degree));
}

std::vector<std::vector<ElemIndex>> tables_of(const std::vector<GroupMap> &maps) {
  std::vector<std::vector<ElemIndex>> out;
  for (const auto &m : maps)
    out.emplace_back(m.table().begin(), m.table().end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupMap map_from(const GroupPtr &g, const std::vector<std::pair<std::string, std::string>> &gens) {
  // Extend generator images by brute force over the endomorphism list.
  for (const auto &m : enumerate_endomorphisms_serial(g)) {
    bool ok = true;
    for (const auto &[x, y] : gens)
      ok = ok && m(P(x, g->degree())) == P(y, g->degree());
    if (ok)
      return m;
  }
  throw std::runtime_error("no such endomorphism");
}

} // namespace

TEST_CASE("identity and trivial maps") {
  GroupPtr c2 = SG({"(12)"}, 3);
  CHECK(identity_map(c2)(P("(12)", 3)) == P("(12)", 3));
  CHECK(trivial_map(c2)(P("(12)", 3)).is_identity());
  CHECK(trivial_map(c2)(Permutation(3)).is_identity());
  CHECK(identity_map(c2).is_homomorphism());
  CHECK(trivial_map(c2).is_homomorphism());
  const std::string expected = R"x({"e":"e","(1 2)":"(1 2)"})x";
  CHECK(to_json(identity_map(c2)).dump() == expected);
}

TEST_CASE("small endomorphism counts") {
  auto c2 = enumerate_endomorphisms(SG({"(12)"}, 4));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].is_identity());
  CHECK(c2[1].is_trivial());
  auto e = enumerate_endomorphisms(share(FiniteGroup::trivial(3)));
  REQUIRE(e.size() == 1);
  CHECK(e[0].is_identity());
  CHECK(enumerate_endomorphisms(SG({"(12)", "(56)"}, 6)).size() == 16);
  // End(S3): 6 automorphisms, 3 maps onto a C2, the trivial map.
  CHECK(enumerate_endomorphisms(share(FiniteGroup::symmetric(3))).size() == 10);
}

TEST_CASE("canonical endomorphism order") {
  auto maps = enumerate_endomorphisms(SG({"(12)", "(56)"}, 6));
  CHECK(maps.front().is_identity());
  CHECK(maps.back().is_trivial());
  for (std::size_t i = 1; i < maps.size(); ++i)
    CHECK(endomorphism_less(maps[i - 1], maps[i]));
}

TEST_CASE("enumeration matches the |G|^|G| filter for the small S4 subgroups") {
  std::size_t checked = 0;
  for (const FiniteGroup &h : enumerate_subgroups(FiniteGroup::symmetric(4))) {
    if (h.order() > 8)
      continue;
    GroupPtr g = share(h);
    auto expected = testing_support::brute_force_endomorphisms(h);
    CHECK(tables_of(enumerate_endomorphisms(g)) == expected);
    CHECK(tables_of(enumerate_endomorphisms_serial(g)) == expected);
    ++checked;
  }
  CHECK(checked == 28);
}

TEST_CASE("parallel and serial enumeration agree, in order") {
  for (const FiniteGroup &h : enumerate_subgroups(FiniteGroup::symmetric(4))) {
    GroupPtr g = share(h);
    auto serial = enumerate_endomorphisms_serial(g);
    for (int jobs : {1, 2, 4}) {
      auto par = enumerate_endomorphisms(g, {kDefaultEndoBudget, jobs});
      REQUIRE(par.size() == serial.size());
      for (std::size_t i = 0; i < par.size(); ++i)
        CHECK(par[i] == serial[i]);
    }
    for (const auto &m : serial)
      CHECK(m.is_homomorphism());
  }
}

TEST_CASE("endomorphism budget") {
  GroupPtr s5 = share(FiniteGroup::symmetric(5));
  CHECK_THROWS_AS(enumerate_endomorphisms(s5, {100, 1}), BudgetExceeded);
  try {
    enumerate_endomorphisms_serial(s5, 100);
  } catch (const BudgetExceeded &e) {
    CHECK(e.budget() == "endo_budget");
  }
}

TEST_CASE("extension on the order-8 join") {
  SubgroupPair pair(G({"(12)"}, 4), G({"(13)(24)"}, 4));
  auto ext = extend(identity_map(pair.a_ptr()), trivial_map(pair.b_ptr()), pair);
  REQUIRE(ext.exists());
  CHECK(ext.extension->is_homomorphism());
  CHECK((*ext.extension)(P("(12)", 4)) == P("(12)", 4));
  CHECK((*ext.extension)(P("(13)(24)", 4)).is_identity());
  auto idid = extend(identity_map(pair.a_ptr()), identity_map(pair.b_ptr()), pair);
  REQUIRE(idid.exists());
  CHECK(idid.extension->is_identity());
}

TEST_CASE("the swap on A does not extend in degree 6") {
  SubgroupPair pair(G({"(12)", "(56)"}, 6), G({"(13)(24)"}, 6));
  GroupMap swap = map_from(pair.a_ptr(), {{"(12)", "(56)"}, {"(56)", "(12)"}});
  auto ext = extend(swap, identity_map(pair.b_ptr()), pair);
  REQUIRE_FALSE(ext.exists());
  const auto &c = *ext.conflict;
  CHECK(c.first_image != c.second_image);
  CHECK(pair.join()->contains(c.element));
  CHECK(format(c.element) == "(1 3)(2 4)(5 6)");
  CHECK(testing_support::sorted({format(c.first_image), format(c.second_image)}) ==
        testing_support::sorted({"(1 3 2 4)", "(1 4 2 3)"}));
  CHECK(is_compatible(identity_map(pair.a_ptr()), trivial_map(pair.b_ptr()), pair));
}

TEST_CASE("compatibility examples") {
  SubgroupPair e1(G({"(12)"}, 3), G({"(13)"}, 3));
  CHECK_FALSE(is_compatible(identity_map(e1.a_ptr()), trivial_map(e1.b_ptr()), e1));
  CHECK(is_compatible(trivial_map(e1.a_ptr()), trivial_map(e1.b_ptr()), e1));
  CHECK_THROWS_AS(extend(identity_map(e1.b_ptr()), trivial_map(e1.b_ptr()), e1),
                  std::invalid_argument);
}

TEST_CASE("property: extensions are unique and satisfy the product law") {
  auto subs = enumerate_subgroups(FiniteGroup::symmetric(4));
  std::vector<GroupPtr> groups;
  std::vector<std::vector<GroupMap>> endos;
  for (const auto &h : subs) {
    groups.push_back(share(h));
    endos.push_back(enumerate_endomorphisms_serial(groups.back()));
  }
  std::mt19937_64 rng(404);
  std::size_t extended = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t i = rng() % subs.size(), j = rng() % subs.size();
    SubgroupPair pair(groups[i], groups[j]);
    SubgroupPair flipped = pair.swapped();
    Extender forward(pair), backward(flipped);
    const GroupMap &alpha = endos[i][rng() % endos[i].size()];
    const GroupMap &beta = endos[j][rng() % endos[j].size()];
    auto ext = forward.extend(alpha, beta);
    // B's generators first: a different visiting order.
    auto other = backward.extend(beta, alpha);
    CHECK(ext.exists() == other.exists());
    if (!ext.exists())
      continue;
    ++extended;
    CHECK(std::ranges::equal(ext.extension->table(), other.extension->table()));
    CHECK(ext.extension->is_homomorphism());
    for (const auto &a : subs[i].elements())
      CHECK((*ext.extension)(a) == alpha(a));
    for (const auto &b : subs[j].elements())
      CHECK((*ext.extension)(b) == beta(b));
    CHECK(product_law_violations(alpha, beta, *ext.extension, 200, trial) == 0);
  }
  CHECK(extended > 0);
}

TEST_CASE("conflicts are genuine") {
  // When extension fails, no endomorphism of the join restricts to (alpha, beta).
  SubgroupPair pair(G({"(12)", "(56)"}, 6), G({"(13)(24)"}, 6));
  auto join_endos = enumerate_endomorphisms_serial(pair.join());
  auto ea = enumerate_endomorphisms_serial(pair.a_ptr());
  auto eb = enumerate_endomorphisms_serial(pair.b_ptr());
  for (const auto &alpha : ea)
    for (const auto &beta : eb) {
      bool exists = false;
      for (const auto &gamma : join_endos) {
        bool ok = true;
        for (const auto &a : pair.a().elements())
          ok = ok && gamma(a) == alpha(a);
        for (const auto &b : pair.b().elements())
          ok = ok && gamma(b) == beta(b);
        exists = exists || ok;
      }
      CHECK(is_compatible(alpha, beta, pair) == exists);
    }
}
