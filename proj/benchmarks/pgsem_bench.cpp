#include <benchmark/benchmark.h>

#include "pgsem/fixtures.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/laws.hpp"
#include "pgsem/pregroup/meaning.hpp"
#include "pgsem/random.hpp"

using namespace pgsem;

namespace {

// Reduction search on strings with `pairs` inserted contractible pairs.
void BM_FindReductions(benchmark::State& state) {
  const pregroup::Poset p({"a"}, {});
  auto rng = random::stream(1, "bench");
  std::vector<pregroup::Type> types;
  for (int i = 0; i < 64; ++i) types.push_back(random::reducible(rng, p, "a", static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0, found = 0;
  for (auto _ : state) {
    found += pregroup::find_reductions(types[i++ % types.size()], "a", p).size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["reductions"] = benchmark::Counter(static_cast<double>(found), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_FindReductions)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_ParseAndEvaluate(benchmark::State& state) {
  const auto g = fixtures::load(fixtures::chips());
  const funcmodel::FunctionalModel f(g.world);
  const auto tokens = pregroup::tokenize("no triangles are blue");
  for (auto _ : state) {
    const auto ps = pregroup::parse_sentence(tokens, g.lexicon, g.poset, "s");
    auto v = funcmodel::eval_functional(f, pregroup::meaning_of(ps[0], g.lexicon, g.poset));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ParseAndEvaluate);

void BM_InterpretOnRandomPartitions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = random::stream(1, "bench interpret");
  const auto scheme = random::partition(rng, n, std::max<std::size_t>(1, n / 4));
  const auto p = random::predicate_on_A(rng, n);
  for (auto _ : state) {
    auto v = interp::interpret(p, scheme);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_InterpretOnRandomPartitions)->Arg(30)->Arg(300)->Arg(3000);

void BM_ChipsGolden(benchmark::State& state) {
  for (auto _ : state) {
    auto checks = fixtures::chips_golden();
    benchmark::DoNotOptimize(checks);
  }
}
BENCHMARK(BM_ChipsGolden)->Unit(benchmark::kMillisecond);

void BM_LawSuite(benchmark::State& state, const char* suite) {
  for (auto _ : state) {
    auto rs = laws::run_suite(suite, {1, 100});
    benchmark::DoNotOptimize(rs);
  }
}
BENCHMARK_CAPTURE(BM_LawSuite, conceptlogic, "conceptlogic")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_LawSuite, vmodel, "vmodel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_LawSuite, pregroup, "pregroup")->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
