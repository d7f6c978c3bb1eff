#include <benchmark/benchmark.h>

#include "resgrass/arrangement.hpp"
#include "resgrass/oracle.hpp"
#include "resgrass/resonance.hpp"

using namespace resgrass;

namespace {

void report_stages(benchmark::State& state, const ResonanceReport& rep) {
  for (const auto& [stage, ms] : rep.timings_ms) state.counters[stage + "_ms"] = ms;
  state.counters["gb_size"] = static_cast<double>(rep.groebner_size);
  state.counters["ring_vars"] = static_cast<double>(rep.ring_vars);
}

void BM_R1(benchmark::State& state, const char* name, bool eliminate) {
  const auto a = fixture(name);
  const PrimeField field;
  ResonanceReport rep;
  for (auto _ : state) {
    rep = r1_hilbert(a, field, {MonomialOrder::grevlex, eliminate});
    benchmark::DoNotOptimize(rep.hilbert);
  }
  report_stages(state, rep);
  state.SetLabel(format_hp(rep.hilbert));
}

void BM_SpanForms(benchmark::State& state) {
  const auto a = fixture("Hessian");
  const PrimeField field;
  const auto ring = plucker_ring(a.n, field);
  const auto pts = os_points(a, field);
  for (auto _ : state) benchmark::DoNotOptimize(span_forms(pts, ring));
}

void BM_DecomposablesA3(benchmark::State& state) {
  const auto a = fixture("A3");
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decomposables_in_I2_bruteforce(a, q, 10'000'000));
}

void BM_EnumerateR1A3(benchmark::State& state) {
  const auto a = fixture("A3");
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_r1(a, q, 10'000'000));
}

void BM_AomotoProfileHessian(benchmark::State& state) {
  const auto a = fixture("Hessian");
  const PrimeField field;
  const ExteriorAlgebra alg(a.n, field);
  const auto pt = alg.linear_int(std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  for (auto _ : state) benchmark::DoNotOptimize(aomoto_profile(a, alg, pt, 1));
}

}  // namespace

BENCHMARK_CAPTURE(BM_R1, A3, "A3", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_R1, A3_no_elimination, "A3", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_R1, Hessian, "Hessian", true)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK(BM_SpanForms)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposablesA3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateR1A3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AomotoProfileHessian)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
