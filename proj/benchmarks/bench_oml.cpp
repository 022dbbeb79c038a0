#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "oml/oml.hpp"

namespace {

std::string stateless_text() {
  std::ifstream in(std::string(OML_FIXTURE_DIR) + "/stateless.gre");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void BM_BooleanAlgebra(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::boolean_algebra(state.range(0)));
}
BENCHMARK(BM_BooleanAlgebra)->DenseRange(4, 10, 2);

void BM_Paste(benchmark::State &state) {
  const auto d = oml::parse_greechie(stateless_text());
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::greechie_to_oml(d));
}
BENCHMARK(BM_Paste);

void BM_GenerateSubOml(benchmark::State &state) {
  const auto l = oml::boolean_algebra(state.range(0));
  const std::vector<oml::Element> gens{1, 2, 4};
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::generate_suboml(l, gens));
}
BENCHMARK(BM_GenerateSubOml)->DenseRange(4, 10, 2);

void BM_Centre(benchmark::State &state) {
  const std::vector<oml::FiniteOml> parts{oml::boolean_algebra(2), oml::mo(2)};
  const auto l = oml::boolean_sum(oml::horizontal_sum(parts),
                                  oml::boolean_algebra(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::centre(l));
}
BENCHMARK(BM_Centre)->DenseRange(1, 3);

void BM_StatelessLp(benchmark::State &state) {
  const auto l = oml::greechie_to_oml(oml::parse_greechie(stateless_text()));
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::has_state(l));
}
BENCHMARK(BM_StatelessLp)->Unit(benchmark::kMillisecond);

void BM_TwoValuedMo(benchmark::State &state) {
  const auto l = oml::mo(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::two_valued_states(l));
}
BENCHMARK(BM_TwoValuedMo)->DenseRange(2, 10, 4);

void BM_RayClosure(benchmark::State &state) {
  const std::array<oml::RationalVector, 1> a{{{1, 0, 0}}}, b{{{1, 1, 0}}},
      c{{{1, 1, 1}}};
  const std::vector<oml::RationalSubspace> gens{oml::subspace_from_vectors(a),
                                                oml::subspace_from_vectors(b),
                                                oml::subspace_from_vectors(c)};
  for (auto _ : state)
    benchmark::DoNotOptimize(oml::ray_closure(gens, state.range(0)));
}
BENCHMARK(BM_RayClosure)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
