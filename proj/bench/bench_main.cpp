// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <stdexcept>

#include "tonic/harness.hpp"
#include "tonic/parser.hpp"
#include "tonic/saturation.hpp"

using namespace tonic;

namespace {

SourceProblem load(std::string_view text, const std::string& id) {
  auto p = parse_problem(text, id);
  if (!p.ok()) throw std::runtime_error("bench problem " + id + " does not parse");
  return *p.value;
}

SourceProblem fixture(const std::string& id) { return load(fixture_texts().at(id), id); }

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

// s and t are endomorphisms, so apps:N universes grow with N
constexpr const char* kChain = R"(
base b { elems a c d; }
const s : b -> b [+];
const t : b -> b [-];
order s <= t;
axiom a <= c;
axiom c <= d;
goal s (t a) <= t (s d);
)";

void BM_saturate(benchmark::State& st) {
  const SourceProblem p = load(kChain, "chain");
  const CalculusConfig calc = CalculusConfig::parse("base+wc+pos");
  const TermUniverse u = build_universe(p.theory, p.goals, UniversePolicy::apps(static_cast<std::size_t>(st.range(1))));
  std::size_t facts = 0;
  for (auto _ : st) {
    const Saturation s = saturate(p.theory, calc, u, {}, exec_of(st));
    facts = s.fact_count();
    benchmark::DoNotOptimize(facts);
  }
  st.counters["universe"] = static_cast<double>(u.size());
  st.counters["facts"] = static_cast<double>(facts);
}

void BM_countermodel(benchmark::State& st) {
  // wc-provable, so the search has to exhaust every weakly complete structure
  const SourceProblem p = fixture("up-down-1");
  EnumOptions opt;
  opt.bounds.max_base = 3;
  opt.require_wc = true;
  std::size_t models = 0;
  for (auto _ : st) {
    const CountermodelResult r = find_countermodel(p.theory, p.goals.at(0), opt, exec_of(st));
    models = r.stats.models;
    benchmark::DoNotOptimize(r.exhausted);
  }
  st.counters["models"] = static_cast<double>(models);
}

void BM_suite(benchmark::State& st) {
  SuiteConfig cfg;
  cfg.cases = 20;
  cfg.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(run_soundness_suite(cfg).cases.size());
}

}  // namespace

BENCHMARK(BM_saturate)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_countermodel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
