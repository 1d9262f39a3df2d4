#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "termgraph/normalize.hpp"
#include "termgraph/refine.hpp"

namespace {

using namespace termgraph;

const TermNetwork& shared_network() {
  static const TermNetwork net = build_network(testing::synthetic_np_corpus(3, 10000), SynonymLexicon{});
  return net;
}

std::vector<std::string> sample_queries(const TermNetwork& net, std::size_t n) {
  std::vector<std::string> out;
  const std::size_t step = std::max<std::size_t>(1, net.inventory().size() / n);
  for (std::size_t i = 0; i < net.inventory().size() && out.size() < n; i += step) {
    out.push_back(join_words(net.term(TermId{static_cast<std::uint32_t>(i)}).words));
  }
  return out;
}

void run_mode(benchmark::State& state, QueryMode mode) {
  const auto& net = shared_network();
  const auto queries = sample_queries(net, 256);
  const int k = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    auto out = refine(Query::make(queries[i++ % queries.size()], mode, k), net);
    benchmark::DoNotOptimize(out);
  }
}

void BM_RefineAuto(benchmark::State& state) { run_mode(state, QueryMode::automatic); }
void BM_RefineChain(benchmark::State& state) { run_mode(state, QueryMode::chain); }
void BM_RefineLrExpand(benchmark::State& state) { run_mode(state, QueryMode::lr_expand); }
void BM_RefineUniterms(benchmark::State& state) { run_mode(state, QueryMode::uniterm_combine); }

BENCHMARK(BM_RefineAuto)->Arg(2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RefineChain)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RefineLrExpand)->Arg(0)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RefineUniterms)->Arg(0)->Unit(benchmark::kMicrosecond);

}  // namespace
