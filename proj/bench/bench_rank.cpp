// Serial dense reference against the sparse OpenMP kernel on Spencer delta matrices.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "sgtc/exact/elimination.hpp"
#include "sgtc/models/models.hpp"
#include "sgtc/report/report.hpp"
#include "sgtc/spencer/complex.hpp"

namespace {

const std::vector<std::string> kModels = {"d3n1", "d2n22", "d4n1", "d4n2"};

const sgtc::exact::SparseMatrix& delta_of(std::size_t k) {
  static std::vector<sgtc::exact::SparseMatrix> cache = [] {
    std::vector<sgtc::exact::SparseMatrix> out;
    for (const auto& name : kModels) out.push_back(sgtc::spencer::spencer_delta(sgtc::models::builtin_model(name)->g).delta);
    return out;
  }();
  return cache[k];
}

void BM_ReferenceRank(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto dense = delta_of(k).to_dense();
  state.SetLabel(kModels[k]);
  for (auto _ : state) benchmark::DoNotOptimize(sgtc::exact::reference::rank(dense));
}

void BM_SparseRank(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto& m = delta_of(k);
  sgtc::exact::set_max_threads(static_cast<int>(state.range(1)));
  state.SetLabel(kModels[k]);
  for (auto _ : state) benchmark::DoNotOptimize(sgtc::exact::rank(m));
}

void BM_Table(benchmark::State& state) {
  sgtc::exact::set_max_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sgtc::report::compute_table());
}

}  // namespace

BENCHMARK(BM_ReferenceRank)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseRank)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table)->Arg(1)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
