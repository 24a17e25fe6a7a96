#include <benchmark/benchmark.h>

#include "omega/arith.hpp"
#include "omega/classical.hpp"
#include "omega/field.hpp"
#include "omega/matrix_group.hpp"
#include "omega/module.hpp"
#include "omega/spectra.hpp"

namespace {

using namespace omega;

void BM_Factorize(benchmark::State& state) {
  u64 n = (u64{1} << 61) - 3;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n--));
}
BENCHMARK(BM_Factorize);

void BM_Zsigmondy(benchmark::State& state) {
  for (auto _ : state)
    for (u64 q = 2; q <= 50; ++q)
      for (unsigned n = 3; n <= 20; ++n) benchmark::DoNotOptimize(zsigmondy(q, n));
}
BENCHMARK(BM_Zsigmondy)->Unit(benchmark::kMillisecond);

void BM_E7Descriptor(benchmark::State& state) {
  u64 q = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e7_semisimple_spectrum(q));
    q = q == 997 ? 2 : q + 1;
  }
}
BENCHMARK(BM_E7Descriptor);

void BM_TorusSpectrum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_torus_spectrum(n, 3));
}
BENCHMARK(BM_TorusSpectrum)->Arg(4)->Arg(8)->Arg(12);

void BM_FieldMul(benchmark::State& state) {
  const FieldPtr f = field_of_order(static_cast<u64>(state.range(0)));
  const auto q = static_cast<Code>(f->size() - 1);
  for (auto _ : state) {
    Code acc = 1;
    for (Code a = 1; a <= q; ++a) acc = f->mul(acc, a) ^ 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(9)->Arg(256)->Arg(3125);

void BM_MatrixMultiply(benchmark::State& state) {
  const FieldPtr f = field_of_order(static_cast<u64>(state.range(0)));
  const unsigned d = 6;
  Matrix a(f, d), b(f, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      a.set(i, j, static_cast<Code>((i * 7 + j * 3 + 1) % f->size()));
      b.set(i, j, static_cast<Code>((i * 5 + j * 11 + 2) % f->size()));
    }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixMultiply)->Arg(2)->Arg(4)->Arg(7);

void BM_Enumerate(benchmark::State& state, const char* spec) {
  const MatrixGroup g = classical_generators(parse_group_spec(spec));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(g).size());
}
BENCHMARK_CAPTURE(BM_Enumerate, SL3_3, "A(2,3)u")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, SU4_2, "2A(3,2)u")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, Sp4_3, "C(2,3)u")->Unit(benchmark::kMillisecond);

void BM_Semidirect(benchmark::State& state) {
  const Enumeration e = enumerate(classical_generators(parse_group_spec("C(2,3)u")));
  for (auto _ : state) benchmark::DoNotOptimize(semidirect_spectrum(e).table.size);
}
BENCHMARK(BM_Semidirect)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
