#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "ufsr/exhaustive.hpp"
#include "ufsr/factorization.hpp"
#include "ufsr/spec_io.hpp"
#include "ufsr/structure.hpp"

using namespace ufsr;

namespace {

AlgebraPtr shipped(const std::string& stem) {
  return build_algebra(load_spec_file(std::string(UFSR_SPECS_DIR) + "/" + stem + ".json"));
}

AlgebraPtr free_algebra(Domain d, int n) {
  AlgebraSpec s{d, {}, {}};
  for (int i = 1; i <= n; ++i) s.odd_generators.push_back("t" + std::to_string(i));
  return build_algebra(s);
}

Element random_element(const AlgebraPtr& a, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    v.push_back(Scalar::from_int(a->field(), static_cast<long long>(rng() % 7) - 3));
  }
  return Element(a, v);
}

void BM_Multiply(benchmark::State& state) {
  const auto a = free_algebra(state.range(0) ? Domain::rationals() : Domain::prime_field(3),
                              static_cast<int>(state.range(1)));
  std::mt19937_64 rng(1);
  const Element x = random_element(a, rng), y = random_element(a, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->ArgsProduct({{0, 1}, {2, 4, 6, 8}});

void BM_Invert(benchmark::State& state) {
  const auto a = free_algebra(Domain::rationals(), static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  Element x = random_element(a, rng);
  x = x + Element::one(a) * Element::scalar(a, Scalar::from_int(a->field(), 5));
  for (auto _ : state) benchmark::DoNotOptimize(invert(x));
}
BENCHMARK(BM_Invert)->Arg(3)->Arg(6);

void BM_Classify(benchmark::State& state) {
  const auto a = shipped(state.range(0) ? "e12_e13_f3" : "f2_t1t2");
  for (auto _ : state) {
    ExhaustiveFactorizer eng(a);
    benchmark::DoNotOptimize(eng.class_count());
  }
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_UfsrCheck(benchmark::State& state) {
  const char* stems[] = {"f2_t1t2", "zero_products_f3", "e12_e13_f3"};
  const auto a = shipped(stems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(ufsr_check(a).status);
}
BENCHMARK(BM_UfsrCheck)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_StructuralCheck(benchmark::State& state) {
  const auto a = shipped(state.range(0) ? "e12_e13_q" : "q_t1t2");
  for (auto _ : state) benchmark::DoNotOptimize(structural_ufsr_check(a).status);
}
BENCHMARK(BM_StructuralCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
