#include <benchmark/benchmark.h>

#include "operadkit/axioms.hpp"
#include "operadkit/cohomology.hpp"
#include "operadkit/dend.hpp"
#include "operadkit/end_operad.hpp"
#include "operadkit/family.hpp"
#include "operadkit/matrix.hpp"
#include "operadkit/sampling.hpp"

namespace {

using namespace operadkit;

OperadElement dual_product(const EndOperad& end) {
  return end.element(2, {{{0, 0}, 0, Rational(1)}, {{0, 1}, 1, Rational(1)}, {{1, 0}, 1, Rational(1)}});
}

void BM_EndComposition(benchmark::State& state) {
  const auto arity = static_cast<std::size_t>(state.range(0));
  const auto end = end_operad(FiniteModule::standard(2), 2 * arity);
  SamplingPolicy p;
  p.seed = 3;
  Sampler s(p);
  const OperadElement f = s.random_element(*end, arity);
  const OperadElement g = s.random_element(*end, arity);
  for (auto _ : state) benchmark::DoNotOptimize(end->compose(f, 1, g));
}
BENCHMARK(BM_EndComposition)->Arg(2)->Arg(3)->Arg(4);

void BM_AxiomsEnd(benchmark::State& state) {
  const auto cap = static_cast<std::size_t>(state.range(0));
  const auto end = end_operad(FiniteModule::standard(2), cap);
  for (auto _ : state) benchmark::DoNotOptimize(check_operad_axioms(*end, cap).ok());
}
BENCHMARK(BM_AxiomsEnd)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AxiomsDend(benchmark::State& state) {
  const auto end = end_operad(FiniteModule::standard(2), 4);
  const auto dend = dend_operad(end);
  for (auto _ : state) benchmark::DoNotOptimize(check_operad_axioms(*dend, 4).ok());
}
BENCHMARK(BM_AxiomsDend)->Unit(benchmark::kMillisecond);

void BM_DifferentialRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto end = end_operad(FiniteModule::standard(2), n + 1);
  const Matrix d = differential_matrix(*end, dual_product(*end), n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
  state.SetLabel(std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
}
BENCHMARK(BM_DifferentialRank)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_FractionFreeRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto end = end_operad(FiniteModule::standard(2), n + 1);
  const Matrix d = differential_matrix(*end, dual_product(*end), n);
  for (auto _ : state) benchmark::DoNotOptimize(rank_fraction_free(d));
}
BENCHMARK(BM_FractionFreeRank)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_CohomologyFamily(benchmark::State& state) {
  const Semigroup omega = Semigroup::left_zero(2);
  const auto end = end_operad(FiniteModule::standard(2), 4);
  const OperadElement pi = dual_product(*end);
  const OperadElement R = end->element(1, {{{0}, 1, Rational(1)}});
  const DendFamily fam = rb_family_split(*end, omega, pi, {R, R});
  const auto fam_op = fam_dend_operad(end, omega);
  const OperadElement x = encode_dend_family(*fam_op, fam);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(*fam_op, x, 3).dims);
}
BENCHMARK(BM_CohomologyFamily)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
