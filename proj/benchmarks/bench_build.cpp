#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "termgraph/network.hpp"
#include "termgraph/stats.hpp"

namespace {

using namespace termgraph;

void BM_BuildNetwork(benchmark::State& state) {
  const auto docs = testing::synthetic_np_corpus(7, static_cast<std::size_t>(state.range(0)));
  const SynonymLexicon lex;
  for (auto _ : state) {
    auto net = build_network(docs, lex);
    benchmark::DoNotOptimize(net);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildNetwork)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_FindAllEdges(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto alphabet = testing::make_alphabet(30);
  const auto vocab = testing::random_vocabulary(rng, alphabet, static_cast<std::size_t>(state.range(0)), 1, 6);
  const auto inv = testing::make_inventory(vocab);
  const auto lex = testing::make_lexicon(testing::random_synonym_pairs(rng, alphabet, 50));
  for (auto _ : state) {
    auto edges = find_all_edges(inv, lex);
    benchmark::DoNotOptimize(edges);
  }
}
BENCHMARK(BM_FindAllEdges)->Arg(200)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_CompareResource(benchmark::State& state) {
  const auto docs = testing::synthetic_np_corpus(7, 10000);
  const auto net = build_network(docs, SynonymLexicon{});
  ExternalResource res;
  res.name = "bench";
  std::size_t i = 0;
  for (const Term& t : net.inventory().terms()) {
    if (i++ % 20 == 0) res.terms.push_back(t.words);
  }
  for (auto _ : state) {
    auto r = compare_resource(res, net, std::span<const Document>(docs));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CompareResource)->Unit(benchmark::kMillisecond);

}  // namespace
