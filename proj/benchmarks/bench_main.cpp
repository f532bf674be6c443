#include <benchmark/benchmark.h>

#include "mgraph/boundary.hpp"
#include "mgraph/enumerate.hpp"
#include "mgraph/family.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/harmonic.hpp"
#include "mgraph/matrix.hpp"
#include "mgraph/pstar.hpp"
#include "mgraph/symmetric.hpp"

using namespace mgraph;

namespace {

RationalMatrix hilbert_like(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(1, i + j + 1) + (i == j ? Rational(1) : Rational());
  return m;
}

RationalMatrix skew(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = Rational(i + 2 * j + 1, j - i + 2);
      m(j, i) = -m(i, j);
    }
  return m;
}

void BM_Determinant(benchmark::State& state) {
  const RationalMatrix m = hilbert_like(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(12);

void BM_PfaffianElimination(benchmark::State& state) {
  const RationalMatrix m = skew(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_elimination(m));
}
BENCHMARK(BM_PfaffianElimination)->Arg(4)->Arg(8)->Arg(12);

void BM_PfaffianExpansion(benchmark::State& state) {
  const RationalMatrix m = skew(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian_expansion(m));
}
BENCHMARK(BM_PfaffianExpansion)->Arg(4)->Arg(8);

void BM_DimensionsCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_dim_cache();
    for (const Partition& lam : level(n, GraphKind::young())) benchmark::DoNotOptimize(dim(lam, GraphKind::young()));
  }
}
BENCHMARK(BM_DimensionsCold)->Arg(8)->Arg(12);

void BM_ShiftedSchur(benchmark::State& state) {
  const Point x{Rational(7, 2), Rational(-1, 3), Rational(5), Rational(2, 7)};
  const auto mus = partitions_up_to(static_cast<int>(state.range(0)), GraphKind::young(), 4);
  for (auto _ : state)
    for (const Partition& mu : mus) benchmark::DoNotOptimize(shifted_schur_eval(mu, x));
}
BENCHMARK(BM_ShiftedSchur)->Arg(5)->Arg(8);

void BM_PstarEval(benchmark::State& state) {
  const Point x{Rational(7, 2), Rational(-1, 3), Rational(5), Rational(2, 7)};
  const auto mus = partitions_up_to(static_cast<int>(state.range(0)), GraphKind::schur(), 4);
  for (auto _ : state)
    for (const Partition& mu : mus) benchmark::DoNotOptimize(pstar_eval(StrictPartition(mu), x));
}
BENCHMARK(BM_PstarEval)->Arg(6)->Arg(10);

void BM_Harmonicity(benchmark::State& state) {
  const HarmonicFamily f = HarmonicFamily::parse("young-zz:e=3,t=2");
  for (auto _ : state) benchmark::DoNotOptimize(check_harmonicity(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Harmonicity)->Arg(6)->Arg(9);

void BM_SchurFamilyPhi(benchmark::State& state) {
  const HarmonicFamily f = HarmonicFamily::parse("schur:t=7/3");
  const auto mus = level(static_cast<int>(state.range(0)), GraphKind::schur());
  for (auto _ : state)
    for (const Partition& mu : mus) benchmark::DoNotOptimize(f.phi(mu));
}
BENCHMARK(BM_SchurFamilyPhi)->Arg(8)->Arg(12);

void BM_SelbergInstance(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(selberg_verify(BoundaryKind::Young, Partition{3, 2, 1}, Partition{2, 1, 1}));
}
BENCHMARK(BM_SelbergInstance);

}  // namespace

BENCHMARK_MAIN();
