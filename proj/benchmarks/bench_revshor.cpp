#include <benchmark/benchmark.h>

#include <random>

#include "revshor/divider.hpp"
#include "revshor/ecshor.hpp"
#include "revshor/fieldref.hpp"

using namespace revshor;

namespace {

BinPoly random_nonzero(std::mt19937_64& rng, int n) {
  for (;;) {
    BinPoly p;
    for (int i = 0; i < n; ++i)
      if (rng() & 1) p.set_coeff(i, true);
    if (!p.is_zero()) return p;
  }
}

void BM_ModInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BinPoly m = default_modulus(n);
  std::mt19937_64 rng(1);
  BinPoly a = random_nonzero(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(modinverse(m, a));
}
BENCHMARK(BM_ModInverse)->Arg(8)->Arg(163)->Arg(571);

void BM_BuildDivision(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Variant v = state.range(1) ? Variant::New : Variant::Baseline;
  FieldSpec F = FieldSpec::standard(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_division(v, F).size());
}
BENCHMARK(BM_BuildDivision)->ArgsProduct({{8, 16, 64}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_CountDivision(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FieldSpec F = FieldSpec::standard(n);
  CostModel model = CostModel::constructed();
  for (auto _ : state) benchmark::DoNotOptimize(count_division(Variant::New, F, model).toffoli);
}
BENCHMARK(BM_CountDivision)->Arg(16)->Arg(163)->Unit(benchmark::kMillisecond);

void BM_SimulateDivision(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Variant v = state.range(1) ? Variant::New : Variant::Baseline;
  FieldSpec F = FieldSpec::standard(n);
  DivisionLayout L = make_division_layout(v, n);
  Circuit c = build_division(v, F);
  std::mt19937_64 rng(2);
  BasisState s(L.width());
  s.write(std::vector<Wire>(L.g.begin(), L.g.end() - 1), random_nonzero(rng, n));
  s.write(L.B, random_nonzero(rng, n));
  for (auto _ : state) {
    apply(c, s);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(c.size()));
}
BENCHMARK(BM_SimulateDivision)->ArgsProduct({{8, 16, 32}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_PointAdd(benchmark::State& state) {
  Curve curve{BinPoly(0x11b), BinPoly(1), BinPoly(0x57)};
  auto pts = enumerate_points(curve);
  CurvePoint P2 = pts[1].at_infinity ? pts[2] : pts[1];
  PointAddCircuit pa = build_point_add(curve, P2, Variant::New);
  for (auto _ : state) {
    BasisState s(pa.layout.width());
    s.set(pa.q, false);
    apply(pa.circuit, s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_PointAdd)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
