// Wall-clock comparison of the serial reference path and the OpenMP path on
// the verification sweeps.

#include <benchmark/benchmark.h>

#include "toroidal/suite.hpp"

namespace {

void run(benchmark::State& state, const char* suite, bool parallel) {
  tor::SuiteConfig c;
  c.suites = {suite};
  c.parallel = parallel;
  for (auto _ : state) {
    const tor::Report r = tor::run_suite(c);
    benchmark::DoNotOptimize(r.checks.size());
  }
}

void BM_Brackets(benchmark::State& s) { run(s, "brackets", s.range(0) != 0); }
void BM_GenfunRound(benchmark::State& s) { run(s, "genfun-round", s.range(0) != 0); }
void BM_Pbw(benchmark::State& s) { run(s, "pbw", s.range(0) != 0); }
void BM_Zhu(benchmark::State& s) { run(s, "zhu", s.range(0) != 0); }
void BM_Fock(benchmark::State& s) { run(s, "fock", s.range(0) != 0); }

}  // namespace

BENCHMARK(BM_Brackets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenfunRound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pbw)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Zhu)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fock)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
