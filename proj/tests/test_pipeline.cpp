#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indep/atlas.hpp"
#include "indep/error.hpp"
#include "indep/pipeline.hpp"
#include "support.hpp"

using namespace indep;
using testing_support::P;

namespace {

SubgroupPair spec(std::size_t degree, std::vector<std::string> a, std::vector<std::string> b) {
  return build_pair(PairSpec{degree, std::move(a), std::move(b)});
}

Config quiet() {
  Config c;
  c.include_timing = false;
  return c;
}

} // namespace

TEST_CASE("parse_pair_spec") {
  auto main_eg = parse_pair_spec(R"j({"degree":4,"A":["(1 2)"],"B":["(1 3)(2 4)"]})j");
  CHECK(main_eg.a().order() == 2);
  CHECK(main_eg.b().order() == 2);
  CHECK(main_eg.join()->order() == 8);
  auto cyc = parse_pair_spec(R"j({"degree":3,"A":["e"],"B":["(1 2 3)"]})j");
  CHECK(cyc.a().is_trivial());
  CHECK(cyc.b().order() == 3);
  auto ex41 = parse_pair_spec(R"j({"degree":6,"A":["(1 2)","(5 6)"],"B":["(1 3)(2 4)"]})j");
  CHECK(ex41.a().order() == 4);
  CHECK(ex41.join()->order() == 16);
}

TEST_CASE("parse_pair_spec rejects bad input") {
  CHECK_THROWS_AS(parse_pair_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":3,"A":["(12)"]})j"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":0,"A":[],"B":[]})j"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":3,"A":"(12)","B":[]})j"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":3,"A":[1],"B":[]})j"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":3,"A":["(14)"],"B":[]})j"), ParseError);
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":3,"A":[],"B":[],"C":[]})j"), ParseError);
  Config tiny;
  tiny.max_group_order = 10;
  CHECK_THROWS_AS(parse_pair_spec(R"j({"degree":5,"A":["(12)","(12345)"],"B":[]})j", tiny),
                  BudgetExceeded);
}

TEST_CASE("config validation") {
  Config c;
  c.endo_budget = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  CHECK_THROWS_AS(decide(spec(3, {"(12)"}, {"(13)"}), c), std::invalid_argument);
}

TEST_CASE("the transposition pair in S3 is dependent") {
  auto pair = spec(3, {"(12)"}, {"(13)"});
  Decision d = decide(pair);
  CHECK(d.status == Status::Dependent);
  // (12)(13) = (132) has order 3, so the order test settles it before the
  // normal closures are needed.
  CHECK(d.deciding_step == Step::Step2ii);
  CHECK(d.stats.join_order == 6u);
  CHECK(d.stats.ncl_b_order == 6u);
  CHECK(pair.ncl_b()->contains(P("(12)", 3)));
  CHECK(recheck(pair, d.certificate));
  std::string text = format_decision(d, OutputFormat::Text);
  CHECK(text.find("DEPENDENT") != std::string::npos);
  CHECK(text.find("(1 2)") != std::string::npos);
  // The separatedness check alone also gives dependence with witness (1 2).
  auto sep = run_step(pair, Step::Step3i, {});
  CHECK(sep.verdict == Verdict::ProvesDependent);
}

TEST_CASE("order-8 example is independent at step 4") {
  Decision d = decide(spec(4, {"(12)"}, {"(13)(24)"}));
  CHECK(d.status == Status::Independent);
  CHECK(d.deciding_step == Step::Step4);
  CHECK(d.stats.endo_a == 2u);
  CHECK(d.stats.endo_b == 2u);
  auto j = to_json(d, false);
  CHECK(j["status"] == "independent");
  CHECK(j["step"] == "step4");
  CHECK(j["stats"]["join_order"] == 8);
  CHECK(j["stats"]["ncl_a_order"] == 4);
  CHECK(j["stats"]["ncl_b_order"] == 4);
  CHECK(j["stats"]["elapsed_ms"].is_null());
  CHECK(j["diagnostics"].is_null());
  CHECK(j.contains("witness"));
}

TEST_CASE("degree-6 example is dependent at step 4") {
  auto pair = spec(6, {"(12)", "(56)"}, {"(13)(24)"});
  Decision d = decide(pair);
  CHECK(d.status == Status::Dependent);
  CHECK(d.deciding_step == Step::Step4);
  const auto *w = std::get_if<witness::IncompatiblePair>(&*d.certificate.witness);
  REQUIRE(w != nullptr);
  CHECK(w->alpha(P("(12)", 6)) == P("(56)", 6));
  CHECK(w->beta.is_identity());
  CHECK(format(w->conflict.element) == "(1 3)(2 4)(5 6)");
  // Both separatedness checks ran and passed before step 4.
  bool saw_3i = false, saw_3ii = false;
  for (const auto &t : d.trace) {
    if (t.step == Step::Step3i)
      saw_3i = t.verdict == Verdict::Inconclusive;
    if (t.step == Step::Step3ii)
      saw_3ii = t.verdict == Verdict::Inconclusive;
  }
  CHECK(saw_3i);
  CHECK(saw_3ii);
}

TEST_CASE("E2 is settled by order divisibility") {
  Decision d = decide(spec(3, {"(12)"}, {"(123)"}));
  CHECK(d.status == Status::Dependent);
  CHECK(d.deciding_step == Step::Step2ii);
  const auto &w = std::get<witness::OrderViolation>(*d.certificate.witness);
  CHECK(w.order_b == 3);
  CHECK(w.order_ab == 2);
}

TEST_CASE("budget trips are in-band") {
  Config c = quiet();
  c.endo_budget = 2;
  Decision d = decide(spec(6, {"(12)", "(56)"}, {"(13)(24)"}), c);
  CHECK(d.status == Status::Inconclusive);
  CHECK(d.deciding_step == Step::BudgetExceeded);
  CHECK(d.budget == "endo_budget");
  CHECK(exit_code(d) == 2);
  auto j = to_json(d, false);
  CHECK(j["status"] == "inconclusive");
  CHECK(j["witness"]["budget"] == "endo_budget");
  CHECK(format_decision(d, OutputFormat::Text).find("endo_budget") != std::string::npos);

  Config small = quiet();
  small.max_group_order = 4;
  // Steps 1 and 2 pass without the join; the join has order 8.
  SubgroupPair pair(FiniteGroup::generated_by({P("(12)", 4)}, 4),
                    FiniteGroup::generated_by({P("(13)(24)", 4)}, 4), 4);
  Decision j2 = decide(pair, small);
  CHECK(j2.status == Status::Inconclusive);
  CHECK(j2.budget == "max_group_order");
  CHECK_FALSE(j2.stats.join_order.has_value());
}

TEST_CASE("diagnostics") {
  Config c = quiet();
  c.run_diagnostics = true;
  Decision d = decide(spec(4, {"(12)"}, {"(13)(24)"}), c);
  REQUIRE(d.diagnostics.has_value());
  REQUIRE(d.diagnostics->factoring.has_value());
  CHECK(d.diagnostics->factoring->holds());
  CHECK(*d.diagnostics->factoring_matches_separation);
  CHECK(d.diagnostics->law_maps == 4);
  CHECK(d.diagnostics->law_violations == 0);
  auto j = to_json(d, false);
  CHECK(j["diagnostics"]["product_law"]["passed"] == true);
  Decision e1 = decide(spec(3, {"(12)"}, {"(13)"}), c);
  CHECK_FALSE(e1.diagnostics->factoring->holds());
  CHECK(*e1.diagnostics->factoring_matches_separation);
}

TEST_CASE("easier-first only changes the order inside step 3") {
  Config c = quiet();
  c.easier_first = true;
  for (const auto &h : {spec(4, {"(12)(34)", "(13)(24)"}, {"(12)"}),
                        spec(6, {"(12)", "(56)"}, {"(13)(24)"})}) {
    Decision base = decide(h, quiet());
    Decision easy = decide(h, c);
    CHECK(base.status == easy.status);
  }
}

TEST_CASE("json output is byte-stable across worker counts") {
  for (const auto &pair : {spec(6, {"(12)", "(56)"}, {"(13)(24)"}), spec(4, {"(12)"}, {"(13)(24)"}),
                           spec(4, {"(12)", "(34)"}, {"(1234)"})}) {
    std::string first;
    for (int jobs : {1, 2, 8}) {
      Config c = quiet();
      c.parallelism = jobs;
      c.run_diagnostics = true;
      std::string out = format_decision(decide(pair, c), OutputFormat::Json, false);
      if (first.empty())
        first = out;
      CHECK(out == first);
    }
  }
}

TEST_CASE("batch decisions keep input order") {
  std::vector<SubgroupPair> pairs{spec(3, {"(12)"}, {"(13)"}), spec(4, {"(12)"}, {"(13)(24)"}),
                                  spec(4, {"(12)"}, {"(34)"})};
  Config c = quiet();
  c.parallelism = 3;
  auto ds = decide_batch(pairs, c);
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].status == Status::Dependent);
  CHECK(ds[1].status == Status::Independent);
  CHECK(ds[2].status == Status::Independent);
  CHECK(ds[2].deciding_step == Step::Step2i);
}

TEST_CASE("step names round trip") {
  for (Step s : {Step::Step1, Step::Step2i, Step::Step2ii, Step::NormalAsym, Step::Step3i,
                 Step::Step3ii, Step::Step3iii, Step::Step3iv, Step::Step4, Step::BudgetExceeded})
    CHECK(parse_step(to_string(s)) == s);
  CHECK_FALSE(parse_step("step5").has_value());
}

TEST_CASE("sweep over S3 and S4: attribution, oracle agreement, certificates") {
  for (std::size_t n : {3, 4}) {
    FiniteGroup sn = FiniteGroup::symmetric(n);
    auto subs = enumerate_subgroups(sn);
    for (const auto &a : subs)
      for (const auto &b : subs) {
        SubgroupPair pair(a, b);
        Decision d = decide(pair, quiet());
        REQUIRE(d.status != Status::Inconclusive);
        CheckOutcome again = run_step(pair, d.deciding_step, quiet());
        CHECK(again.verdict == d.certificate.verdict);
        CHECK(recheck(pair, d.certificate));
        auto oracle = brute_force_independent(pair, {.jobs = 1, .skip_certified = false});
        CHECK((d.status == Status::Independent) ==
              (oracle.verdict == Verdict::ProvesIndependent));
        Decision flipped = decide(pair.swapped(), quiet());
        CHECK(flipped.status == d.status);
      }
  }
}
