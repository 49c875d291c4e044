// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "qnoether/noether_suites.hpp"
#include "qnoether/uqgln.hpp"
#include "qnoether/weyl.hpp"

using namespace qn;

namespace {

SkewElem sample(int n) {
  auto s = noether_spec(n);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(1, 5), e(0, 2), y(-1, 1);
  SkewElem a(s);
  for (int t = 0; t < 4; ++t) {
    MultiRat f(n, Int(c(rng)));
    std::vector<int> beta(n);
    for (int j = 1; j <= n; ++j) {
      f *= MultiRat::var(n, j).pow(e(rng));
      beta[j - 1] = y(rng);
    }
    a += SkewElem::make(s, {{beta, f}});
  }
  return a;
}

template <bool Parallel>
void BM_Reynolds(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const GroupType t = st.range(1) ? GroupType::B : GroupType::D;
  SkewElem a = sample(n);
  for (auto _ : st) {
    SkewElem r = Parallel ? reynolds(a, t, n, Convention::Standard) : reynolds_serial(a, t, n, Convention::Standard);
    benchmark::DoNotOptimize(r);
  }
}

std::vector<Task> suite_tasks(int kind) {
  SuiteConfig cfg;
  if (kind == 0) return uq::uq_tasks(3, "defining-relations", cfg);
  if (kind == 1) {
    auto ctx = std::make_shared<noether::NoetherContext>(3);
    return noether::noether_tasks(ctx, "xy-relations", cfg);
  }
  cfg.mode = Mode::RandomEval;
  auto ctx = std::make_shared<noether::NoetherContext>(6);
  return noether::noether_tasks(ctx, "tj-ek", cfg);
}

template <bool Parallel>
void BM_Suite(benchmark::State& st) {
  const int kind = static_cast<int>(st.range(0));
  for (auto _ : st) {
    // Fresh tasks each round so no cached level is reused.
    st.PauseTiming();
    auto tasks = suite_tasks(kind);
    st.ResumeTiming();
    Report r = Parallel ? run_tasks("bench", 0, Mode::Symbolic, std::move(tasks))
                        : run_tasks_serial("bench", 0, Mode::Symbolic, std::move(tasks));
    if (!r.pass()) st.SkipWithError("suite failed");
  }
  st.SetLabel(kind == 0 ? "uq N=3 defining-relations" : kind == 1 ? "xy-relations n=3" : "tj-ek n=6 random-eval");
}

}  // namespace

BENCHMARK(BM_Reynolds<true>)->Args({3, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reynolds<false>)->Args({3, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite<true>)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite<false>)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
