#include <benchmark/benchmark.h>

#include "qpack/diffract.hpp"
#include "qpack/modified.hpp"

using namespace qpack;

namespace {

StripSpec reference_spec() {
    const Embedding emb = embed(build_cluster(GroupSpec::cyclic(12), {{1.0, 0.0}}));
    return make_strip_spec(emb, Vec(6, 0.1), 9.0, 6000);
}

}  // namespace

static void BM_StandardFragment(benchmark::State& state) {
    const StripSpec spec = reference_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_standard(spec));
    }
}
BENCHMARK(BM_StandardFragment);

static void BM_ModifiedFragment(benchmark::State& state) {
    ModifiedConfig cfg;
    cfg.spec = reference_spec();
    cfg.p = 50.0;
    cfg.delta = 0.25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_modified(cfg));
    }
}
BENCHMARK(BM_ModifiedFragment);

static void BM_IntensityCell(benchmark::State& state) {
    const Pattern pat = generate_standard(reference_spec());
    const Vec xi = {0.51, -0.33};
    for (auto _ : state) {
        benchmark::DoNotOptimize(intensity(pat, xi));
    }
}
BENCHMARK(BM_IntensityCell);

static void BM_DiffractionGrid(benchmark::State& state) {
    const Pattern pat = generate_standard(reference_spec());
    for (auto _ : state) {
        benchmark::DoNotOptimize(diffraction_map(pat, GridSpec{}));
    }
}
BENCHMARK(BM_DiffractionGrid);
