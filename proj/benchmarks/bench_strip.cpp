#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "qpack/strip.hpp"
#include "qpack/verify.hpp"

using namespace qpack;

namespace {

StripSpec planar_spec() {
    const Embedding emb = embed(build_cluster(GroupSpec::cyclic(12), {{1.0, 0.0}}));
    return make_strip_spec(emb, Vec(6, 0.1), 9.0, 6000);
}

StripSpec icosahedral_spec() {
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    const Embedding emb = embed(build_cluster(
        GroupSpec::icosahedral(), {{1.0, tau, 0.0}, {1.0, 1.0, 1.0}, {1.0, 0.0, 0.0}}));
    return make_strip_spec(emb, Vec(31, 0.1), 20.0, 2000);
}

std::vector<Vec> sample_points(int k, int n) {
    std::mt19937_64 rng(1);
    std::vector<Vec> out(n, Vec(k));
    for (auto& y : out)
        for (double& v : y) v = uniform(rng(), -1.0, 1.0);
    return out;
}

}  // namespace

static void BM_InStripPlanar(benchmark::State& state) {
    const StripSpec spec = planar_spec();
    const auto pts = sample_points(6, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_strip(spec, pts[i++ & 255]));
    }
}
BENCHMARK(BM_InStripPlanar);

// random points fail an early constraint; this measures the reject path
static void BM_InStripIcosahedral31Miss(benchmark::State& state) {
    const StripSpec spec = icosahedral_spec();
    const auto pts = sample_points(31, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_strip(spec, pts[i++ & 63]));
    }
}
BENCHMARK(BM_InStripIcosahedral31Miss);

// an accepted point scans all 31465 constraint families
static void BM_InStripIcosahedral31Hit(benchmark::State& state) {
    const StripSpec spec = icosahedral_spec();
    const Vec origin = sub(Vec(31, 0.0), spec.translation);
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_strip(spec, origin));
    }
}
BENCHMARK(BM_InStripIcosahedral31Hit);

static void BM_SliceOraclePlanar(benchmark::State& state) {
    const StripSpec spec = planar_spec();
    const auto pts = sample_points(6, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slice_oracle(spec.embedding, pts[i++ & 255]));
    }
}
BENCHMARK(BM_SliceOraclePlanar);

static void BM_BuildConstraints31(benchmark::State& state) {
    const StripSpec spec = icosahedral_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_constraints(spec.embedding));
    }
}
BENCHMARK(BM_BuildConstraints31);
