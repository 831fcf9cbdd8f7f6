#include <benchmark/benchmark.h>

#include <sstream>

#include "collabnet/centrality.hpp"
#include "collabnet/metrics.hpp"
#include "collabnet/synth.hpp"

namespace {

using namespace collabnet;

struct Corpus {
  InstitutionRegistry registry;
  CleanCorpus corpus;
};

Corpus synthetic_corpus(int publications) {
  SynthConfig config;
  config.seed = 17;
  config.publications = publications;
  std::ostringstream records, mapping;
  generate(config, records, mapping);
  std::istringstream m(mapping.str()), r(records.str());
  Corpus c;
  c.registry = parse_mapping(m);
  c.corpus = ingest_records(r, c.registry);
  return c;
}

const CollabNetwork& synthetic_network() {
  static const CollabNetwork net = [] {
    const auto c = synthetic_corpus(8000);
    return build_network(c.corpus, c.registry);
  }();
  return net;
}

void BM_BuildNetwork(benchmark::State& state) {
  const auto c = synthetic_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_network(c.corpus, c.registry, {.with_subjects = true}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildNetwork)->Arg(2000)->Arg(8000);

void BM_GiantPathMetrics(benchmark::State& state) {
  const auto& net = synthetic_network();
  for (auto _ : state) {
    benchmark::DoNotOptimize(giant_path_metrics(
        net, Parallelism{static_cast<unsigned>(state.range(0))}));
  }
}
BENCHMARK(BM_GiantPathMetrics)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Betweenness(benchmark::State& state) {
  const auto& net = synthetic_network();
  BetweennessOptions options;
  options.weighted = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(net, options));
}
BENCHMARK(BM_Betweenness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Eigenvector(benchmark::State& state) {
  const auto& net = synthetic_network();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvector(net));
}
BENCHMARK(BM_Eigenvector)->Unit(benchmark::kMillisecond);

void BM_Clustering(benchmark::State& state) {
  const auto& net = synthetic_network();
  for (auto _ : state) benchmark::DoNotOptimize(avg_clustering(net));
}
BENCHMARK(BM_Clustering);

}  // namespace

BENCHMARK_MAIN();
