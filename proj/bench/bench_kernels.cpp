// Parallel kernels against their serial references.
//
//   ./bench_kernels --benchmark_filter=Endo

#include "indep/homomorphism.hpp"
#include "indep/independence.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace indep;

namespace {

GroupPtr group(std::vector<std::string> gens, std::size_t degree) {
  std::vector<Permutation> ps;
  for (const auto &g : gens)
    ps.push_back(parse_cycles(g, degree));
  return std::make_shared<const FiniteGroup>(FiniteGroup::generated_by(ps, degree));
}

GroupPtr s4() { return group({"(1 2)", "(1 2 3 4)"}, 4); }

// S4 on {1..4} and S3 on {5,6,7}: they commute, so every endomorphism pair
// extends and the search has to visit all of them.
SubgroupPair commuting_pair() {
  return SubgroupPair(group({"(1 2)", "(1 2 3 4)"}, 7), group({"(5 6)", "(5 6 7)"}, 7));
}

void BM_EndoSerial(benchmark::State &state) {
  GroupPtr g = s4();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_endomorphisms_serial(g));
}

void BM_EndoParallel(benchmark::State &state) {
  GroupPtr g = s4();
  EndomorphismOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_endomorphisms(g, opt));
}

void BM_BruteSerial(benchmark::State &state) {
  SubgroupPair pair = commuting_pair();
  auto ea = enumerate_endomorphisms(pair.a_ptr());
  auto eb = enumerate_endomorphisms(pair.b_ptr());
  pair.join();
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_independent_serial(pair, ea, eb, false));
  state.counters["pairs"] = static_cast<double>(ea.size() * eb.size());
}

void BM_BruteParallel(benchmark::State &state) {
  SubgroupPair pair = commuting_pair();
  auto ea = enumerate_endomorphisms(pair.a_ptr());
  auto eb = enumerate_endomorphisms(pair.b_ptr());
  pair.join();
  BruteForceOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  opt.skip_certified = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_independent(pair, ea, eb, opt));
  state.counters["pairs"] = static_cast<double>(ea.size() * eb.size());
}

void threads(benchmark::internal::Benchmark *b) {
  for (int t = 1; t <= std::max(1, omp_get_max_threads()); t *= 2)
    b->Arg(t);
}

} // namespace

BENCHMARK(BM_EndoSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EndoParallel)->Apply(threads)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->Apply(threads)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
