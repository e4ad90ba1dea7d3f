// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// line fails.

#include "indep/atlas.hpp"
#include "indep/pipeline.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace indep;
using testing_support::formatted;
using testing_support::G;
using testing_support::P;
using testing_support::sorted;

namespace {

int failures = 0;

void report(const std::string &id, bool ok, const std::string &detail) {
  std::printf("criterion %-4s %s  %s\n", id.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

SubgroupPair pair_of(std::size_t degree, std::vector<std::string> a, std::vector<std::string> b) {
  return build_pair(PairSpec{degree, std::move(a), std::move(b)});
}

std::vector<std::string> elems(const FiniteGroup &g) { return formatted(g.elements()); }

const witness::IncompatiblePair *incompatible(const Decision &d) {
  if (!d.certificate.witness)
    return nullptr;
  return std::get_if<witness::IncompatiblePair>(&*d.certificate.witness);
}

bool trace_passed(const Decision &d, Step s) {
  for (const auto &t : d.trace)
    if (t.step == s)
      return t.verdict == Verdict::Inconclusive;
  return false;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  auto pair = pair_of(3, {"(12)"}, {"(13)"});
  Decision d = decide(pair);
  bool ok = d.status == Status::Dependent && pair.join()->order() == 6 &&
            *pair.ncl_b() == FiniteGroup::symmetric(3) && pair.ncl_b()->contains(P("(12)", 3)) &&
            recheck(pair, d.certificate);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << "A=<(12)>, B=<(13)>: " << to_string(d.status) << " at " << to_string(d.deciding_step)
     << ", |join|=" << pair.join()->order() << ", |<Conj(B)>|=" << pair.ncl_b()->order()
     << " contains (1 2); " << ms << " ms";
  report("1", ok && ms < 1000, os.str());
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  auto pair = pair_of(4, {"(12)"}, {"(13)(24)"});
  Decision d = decide(pair);
  bool join_ok = elems(*pair.join()) == sorted({"e", "(1 2)", "(3 4)", "(1 2)(3 4)",
                                                "(1 3)(2 4)", "(1 4)(2 3)", "(1 3 2 4)",
                                                "(1 4 2 3)"});
  bool ncl_a = elems(*pair.ncl_a()) == sorted({"e", "(1 2)", "(3 4)", "(1 2)(3 4)"});
  bool ncl_b = elems(*pair.ncl_b()) == sorted({"e", "(1 3)(2 4)", "(1 2)(3 4)", "(1 4)(2 3)"});
  bool meet = elems(intersection(*pair.ncl_a(), *pair.ncl_b())) == sorted({"e", "(1 2)(3 4)"});
  double ms = ms_since(t0);
  std::ostringstream os;
  os << "A=<(12)>, B=<(13)(24)>: " << to_string(d.status) << " at "
     << to_string(d.deciding_step) << ", join listed 8 elements " << (join_ok ? "ok" : "WRONG")
     << ", <Conj(A)> " << (ncl_a ? "ok" : "WRONG") << ", <Conj(B)> " << (ncl_b ? "ok" : "WRONG")
     << ", meet {e,(1 2)(3 4)} " << (meet ? "ok" : "WRONG") << "; " << ms << " ms";
  report("2", d.status == Status::Independent && join_ok && ncl_a && ncl_b && meet && ms < 1000,
         os.str());
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  auto pair = pair_of(6, {"(12)", "(56)"}, {"(13)(24)"});
  Decision d = decide(pair);
  const auto *w = incompatible(d);
  bool cert = w && w->alpha(P("(12)", 6)) == P("(56)", 6) &&
              w->alpha(P("(56)", 6)) == P("(12)", 6) && w->beta.is_identity();
  bool conflict = w && !extend(w->alpha, w->beta, pair).exists() && recheck(pair, d.certificate);
  bool separated_first = trace_passed(d, Step::Step3i) && trace_passed(d, Step::Step3ii);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << "A=<(12),(56)>, B=<(13)(24)>: " << to_string(d.status) << " at "
     << to_string(d.deciding_step);
  if (w)
    os << ", alpha swaps (1 2)<->(5 6), beta = id, " << format(w->conflict.element)
       << " forced to " << format(w->conflict.first_image) << " and "
       << format(w->conflict.second_image);
  os << ", separatedness passed first: " << (separated_first ? "yes" : "no") << "; " << ms
     << " ms";
  report("3",
         d.status == Status::Dependent && d.deciding_step == Step::Step4 && cert && conflict &&
             separated_first && ms < 5000,
         os.str());
}

void criterion4() {
  auto pair = pair_of(3, {"(12)"}, {"(123)"});
  Decision d = decide(pair);
  const witness::OrderViolation *w =
      d.certificate.witness ? std::get_if<witness::OrderViolation>(&*d.certificate.witness)
                            : nullptr;
  std::ostringstream os;
  os << "A=<(12)>, B=<(123)>: " << to_string(d.status) << " at " << to_string(d.deciding_step);
  if (w)
    os << ", a=" << format(w->a) << " b=" << format(w->b) << " ab=" << format(w->ab)
       << ", |b|=" << w->order_b << " |ab|=" << w->order_ab;
  report("4",
         d.status == Status::Dependent && d.deciding_step == Step::Step2ii && w &&
             w->order_b == 3 && w->order_ab == 2,
         os.str());
}

void criterion5() {
  auto pair = pair_of(4, {"(12)", "(34)"}, {"(1234)"});
  Decision d = decide(pair);
  report("5a", d.status == Status::Dependent,
         std::string("A=<(12),(34)>, B=<(1234)>: ") + to_string(d.status));

  CheckOutcome merge = check_conjugacy_merge(pair);
  const witness::ConjugacyMerge *w =
      merge.witness ? std::get_if<witness::ConjugacyMerge>(&*merge.witness) : nullptr;
  bool witness_ok = w && sorted({format(w->x1), format(w->x2)}) == sorted({"(1 2)", "(3 4)"}) &&
                    recheck(pair, merge);
  std::ostringstream os;
  os << "conjugacy-merge check: " << to_string(merge.verdict);
  if (w)
    os << ", " << describe(*merge.witness);
  report("5b", witness_ok, os.str());

  std::ostringstream step;
  step << "decide attributes the verdict to " << to_string(d.deciding_step)
       << " (expected step3iii or step3iv)";
  if (d.certificate.witness)
    step << "; " << describe(*d.certificate.witness);
  report("5c", d.deciding_step == Step::Step3iii || d.deciding_step == Step::Step3iv,
         step.str());
}

void criterion6() {
  auto ind = pair_of(4, {"(12)"}, {"(34)"});
  auto dep = pair_of(4, {"(13)"}, {"(34)"});
  Decision di = decide(ind), dd = decide(dep);
  bool iso = is_isomorphic(ind.a(), dep.a()).isomorphic && is_isomorphic(ind.b(), dep.b()).isomorphic;
  std::ostringstream os;
  os << "(<(12)>,<(34)>) " << to_string(di.status) << " at " << to_string(di.deciding_step)
     << "; (<(13)>,<(34)>) " << to_string(dd.status) << " at " << to_string(dd.deciding_step)
     << "; A~A' and B~B': " << (iso ? "yes" : "no");
  report("6",
         di.status == Status::Independent && di.deciding_step == Step::Step2i &&
             dd.status == Status::Dependent && dd.deciding_step == Step::Step2ii && iso,
         os.str());
}

std::string atlas_report(std::size_t n, int jobs, ReportFormat format, Atlas *keep = nullptr) {
  AtlasOptions options;
  options.config.parallelism = jobs;
  Atlas atlas = classify_all_pairs(n, options);
  std::string out = render_report(atlas.rows, atlas.summary, format);
  if (keep)
    *keep = std::move(atlas);
  return out;
}

Atlas s3_atlas, s4_atlas;

void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  atlas_report(3, 0, ReportFormat::Json, &s3_atlas);
  atlas_report(4, 0, ReportFormat::Json, &s4_atlas);
  double ms = ms_since(t0);
  const auto &a = s3_atlas.summary, &b = s4_atlas.summary;
  std::ostringstream os;
  os << "S3 " << a.rows << " rows, " << a.oracle_disagreements << " disagreements; S4 " << b.rows
     << " rows, " << b.oracle_disagreements << " disagreements, " << b.inconclusive
     << " inconclusive; " << ms / 1000 << " s";
  report("7",
         a.rows == 36 && b.rows == 900 && a.oracle_disagreements == 0 &&
             b.oracle_disagreements == 0 && a.inconclusive == 0 && b.inconclusive == 0 &&
             ms < 600000,
         os.str());
}

void criterion8() {
  const Atlas &at = s4_atlas;
  std::vector<GroupPtr> groups;
  for (const auto &h : at.subgroups)
    groups.push_back(share(h));
  std::map<std::string, std::size_t> violations, checked;
  auto tally = [&](const std::string &name, bool holds) {
    ++checked[name];
    violations[name] += !holds;
  };
  std::mt19937_64 rng(2024);
  for (const AtlasRow &row : at.rows) {
    SubgroupPair pair(groups[row.a_index], groups[row.b_index]);
    const FiniteGroup &j = *pair.join();
    bool indep = row.oracle == Status::Independent;
    bool a_sep = intersection(pair.a(), *pair.ncl_b()).is_trivial();
    bool b_sep = intersection(pair.b(), *pair.ncl_a()).is_trivial();
    bool an = is_normal_in(pair.a(), j), bn = is_normal_in(pair.b(), j);
    bool disjoint = intersection(pair.a(), pair.b()).is_trivial();

    tally("independent => both separated", !indep || (a_sep && b_sep));
    tally("B-separated <=> (id,triv) compatible",
          a_sep == is_compatible(identity_map(pair.a_ptr()), trivial_map(pair.b_ptr()), pair) &&
              b_sep == is_compatible(trivial_map(pair.a_ptr()), identity_map(pair.b_ptr()), pair));
    if (an && bn && disjoint)
      tally("both normal + disjoint => independent", indep);
    if (an != bn)
      tally("exactly one normal => dependent", !indep);
    auto fac = verify_factoring(pair);
    if (indep)
      tally("independent => quotient isomorphisms", fac.holds());
    tally("quotient ~ A <=> A is B-separated",
          fac.join_mod_ncl_b_iso_a == a_sep && fac.join_mod_ncl_a_iso_b == b_sep);
    if (indep) {
      for (int t = 0; t < 10; ++t) {
        auto sample = [&](const FiniteGroup &h) {
          std::vector<Permutation> s;
          for (const auto &x : h.elements())
            if (rng() % 3 == 0)
              s.push_back(x);
          return s;
        };
        auto sa = sample(pair.a()), sb = sample(pair.b());
        if (is_independent_set(sa, pair.a()) && is_independent_set(sb, pair.b()))
          tally("union of independent sets", check_union_independent_sets(pair, sa, sb));
      }
    }
  }
  std::ostringstream os;
  std::size_t total_v = 0;
  bool all_ran = true;
  for (const auto &[name, n] : checked) {
    os << name << ": " << violations[name] << "/" << n << "; ";
    total_v += violations[name];
    all_ran = all_ran && n > 0;
  }
  report("8", total_v == 0 && checked.size() == 7 && all_ran, os.str());
}

void criterion9() {
  std::size_t groups = 0, mismatches = 0;
  for (const FiniteGroup &h : s4_atlas.subgroups) {
    if (h.order() > 8)
      continue;
    ++groups;
    std::vector<std::vector<ElemIndex>> got;
    for (const auto &m : enumerate_endomorphisms(share(h)))
      got.emplace_back(m.table().begin(), m.table().end());
    std::sort(got.begin(), got.end());
    mismatches += got != testing_support::brute_force_endomorphisms(h);
  }
  std::ostringstream os;
  os << groups << " subgroups of order <= 8, " << mismatches << " mismatches against the "
     << "|G|^|G| filter";
  report("9", groups == 28 && mismatches == 0, os.str());
}

void criterion10() {
  bool same = true;
  std::ostringstream os;
  for (std::size_t n : {3, 4})
    for (ReportFormat f : {ReportFormat::Csv, ReportFormat::Json}) {
      std::string one = atlas_report(n, 1, f);
      std::string many = atlas_report(n, 4, f);
      same = same && one == many;
      os << "S" << n << (f == ReportFormat::Csv ? " csv " : " json ") << one.size()
         << " bytes " << (one == many ? "identical" : "DIFFER") << "; ";
    }
  report("10", same, os.str() + "workers 1 vs 4");
}

} // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  for (const auto &c : criteria) {
    try {
      c();
    } catch (const std::exception &e) {
      report("?", false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d failing line(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
