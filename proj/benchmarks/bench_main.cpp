#include <benchmark/benchmark.h>

#include "lensfill/dinv.hpp"
#include "lensfill/embed.hpp"
#include "lensfill/families.hpp"
#include "lensfill/intlin.hpp"

using namespace lensfill;

static void BM_EmbedTange(benchmark::State& state) {
  const LensSpace l = family_member(FamilyId::Tange, state.range(0));
  const ChainLattice c = ChainLattice::from_lens(l);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_embeddings(c, c.size() + 1));
}
BENCHMARK(BM_EmbedTange)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

static void BM_ClassifySec3(benchmark::State& state) {
  const LensSpace l = family_member(FamilyId::Sec3, state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(classify_dehn(l));
}
BENCHMARK(BM_ClassifySec3)->Args({9, 7})->Args({9, 8})->Args({11, 7})->Unit(benchmark::kMicrosecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
  std::uint64_t seed = 12345;
  for (auto& r : rows)
    for (Int& x : r) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      x = static_cast<long>(seed >> 59) - 16;
    }
  const IntMatrix m = IntMatrix::from_rows(rows);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

static void BM_HjExpand(benchmark::State& state) {
  const LensSpace l = family_member(FamilyId::Sec4, 8, 8);
  for (auto _ : state) benchmark::DoNotOptimize(hj_expand(l.p(), l.q()));
}
BENCHMARK(BM_HjExpand);

static void BM_DInvariant(benchmark::State& state) {
  const LensSpace l = family_member(FamilyId::Tange, 50);
  Int label = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_invariant(l, label));
    label = (label + 7919) % l.p();
  }
}
BENCHMARK(BM_DInvariant);
BENCHMARK_MAIN();
