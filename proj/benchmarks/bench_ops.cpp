#include <benchmark/benchmark.h>

#include <random>

#include "valtop/closeness.hpp"
#include "valtop/topology_compare.hpp"

using namespace valtop;

namespace {

RingElem random_poly1(std::mt19937_64& eng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  Poly1Coeffs c;
  for (int e = 0; e <= max_deg; ++e) {
    int k = coeff(eng);
    if (k != 0) c[e] = Rat(k);
  }
  return RingElem::poly1(std::move(c));
}

void BM_padic_eval(benchmark::State& state) {
  Valuation nu = Valuation::padic(3);
  Int n = 1;
  for (int k = 0; k < state.range(0); ++k) n *= 3;
  n *= 7;
  RingElem e = RingElem::integer(n);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(nu, e));
}
BENCHMARK(BM_padic_eval)->Arg(8)->Arg(64)->Arg(512);

void BM_gauss_eval(benchmark::State& state) {
  std::mt19937_64 eng(5);
  Valuation nu = Valuation::gauss(2, Rat(1, 2));
  RingElem p = random_poly1(eng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(nu, p));
}
BENCHMARK(BM_gauss_eval)->Arg(4)->Arg(16)->Arg(64);

void BM_poly_mul(benchmark::State& state) {
  std::mt19937_64 eng(7);
  RingElem a = random_poly1(eng, static_cast<int>(state.range(0)));
  RingElem b = random_poly1(eng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(a, b));
}
BENCHMARK(BM_poly_mul)->Arg(8)->Arg(32)->Arg(128);

void BM_open_set_union(benchmark::State& state) {
  const GroupSpec g = GroupSpec::integers();
  std::vector<Interval> parts;
  for (int k = 0; k < state.range(0); ++k) {
    parts.emplace_back(g, GroupElem(g, {Rat(4 * k)}), GroupElem(g, {Rat(4 * k + 2)}),
                       false);
  }
  OpenSet a = OpenSet::of(g, parts);
  OpenSet b = OpenSet::of(g, {Interval(g, GroupElem(g, {Rat(1)}),
                                       GroupElem(g, {Rat(3 * state.range(0))}), false)});
  for (auto _ : state) benchmark::DoNotOptimize(a.unite(b));
}
BENCHMARK(BM_open_set_union)->Arg(4)->Arg(32)->Arg(128);

void BM_minkowski_hull(benchmark::State& state) {
  const GroupSpec g = GroupSpec::integers();
  std::vector<Interval> parts;
  for (int k = 0; k < state.range(0); ++k)
    parts.emplace_back(g, GroupElem(g, {Rat(5 * k)}), GroupElem(g, {Rat(5 * k + 3)}),
                       false);
  OpenSet a = OpenSet::of(g, parts);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_hull(a, a));
}
BENCHMARK(BM_minkowski_hull)->Arg(2)->Arg(8)->Arg(24);

void BM_certificate_synthesis(benchmark::State& state) {
  FnTable f(RingSpec::integers(), MonoidSpec{GroupSpec::integers(), false});
  f.set(RingElem::integer(2), ExtValue::finite(GroupElem(GroupSpec::integers(), {Rat(5)})));
  f.set(RingElem::integer(4), ExtValue::finite(GroupElem(GroupSpec::integers(), {Rat(2)})));
  auto violation = *check_axioms(f);
  for (auto _ : state)
    benchmark::DoNotOptimize(synthesize_separating_open(f, violation));
}
BENCHMARK(BM_certificate_synthesis);

void BM_sample_suite_refinement(benchmark::State& state) {
  const MonoidSpec carrier{GroupSpec::rationals(), false};
  auto suite = standard_sample_suite(carrier);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        refines(TopologyId::a2(), TopologyId::a3(), carrier, suite));
}
BENCHMARK(BM_sample_suite_refinement);

}  // namespace

BENCHMARK_MAIN();
