#include "primehopf/report.hpp"

#include <benchmark/benchmark.h>

using namespace primehopf;

namespace {

PresentationPtr liu(int n, int w) { return Presentation::make(FamilySpec::liu(n, w)); }
PresentationPtr taft(int n, int t) { return Presentation::make(FamilySpec::taft(n, t)); }

void BM_CyclotomicProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyclotomic a = Cyclotomic::parse("1/3 + 2 * z(" + std::to_string(n) + ")^1");
  const Cyclotomic b = primitive_root(n).pow(n / 2 + 1) - Cyclotomic(5L);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(4)->Arg(8)->Arg(12)->Arg(30);

void BM_LiuProduct(benchmark::State& state) {
  const auto h = liu(static_cast<int>(state.range(0)), 3);
  const Element a = Element::parse(h, "y^2 h^-3 + 2 * f y - h^5");
  const Element b = Element::parse(h, "h^2 y^3 + y - 1");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LiuProduct)->Arg(4)->Arg(8);

void BM_TaftCoproductPower(benchmark::State& state) {
  const auto h = taft(8, 3);
  const Element x = Element::parse(h, "x").pow(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(x));
}
BENCHMARK(BM_TaftCoproductPower)->Arg(2)->Arg(5)->Arg(7);

void BM_VerifyAxioms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Fresh presentation so the coproduct memo starts empty.
    const auto h = liu(n, 2);
    benchmark::DoNotOptimize(verify_hopf_axioms(h, 50, 1).all_pass());
  }
}
BENCHMARK(BM_VerifyAxioms)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_IntegralOrderMinor(benchmark::State& state) {
  const auto h = taft(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(io_im(h).im);
}
BENCHMARK(BM_IntegralOrderMinor)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_FixedRing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = liu(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_ring_check(h, FixedSide::Left, 2 * n).equal);
}
BENCHMARK(BM_FixedRing)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Twistor(benchmark::State& state) {
  const auto h = liu(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(twistor(h).dim());
}
BENCHMARK(BM_Twistor)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PiDegree(benchmark::State& state) {
  const auto h = liu(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(pi_degree(h));
}
BENCHMARK(BM_PiDegree)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
