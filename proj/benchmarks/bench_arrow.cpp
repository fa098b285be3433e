#include <benchmark/benchmark.h>

#include "rcx/constructions.hpp"
#include "rcx/critical.hpp"

using namespace rcx;

namespace {

SearchOptions opts(bool pruned) {
    SearchOptions o;
    o.deterministic = !pruned;
    o.use_hints = pruned;
    o.deferred_full_checks = pruned;
    o.color_swap_symmetry = pruned;
    o.orbit_symmetry = pruned;
    return o;
}

}  // namespace

static void BM_ArrowsPuncturedMatching(benchmark::State& state) {
    const Graph host = delete_class_member(complete(5), {DeletionClass::Matching}, 2);
    SearchOptions o = opts(true);
    o.shape = HostShape{HostShape::Kind::MinusMatching, 5, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(arrows(host, Pattern::matching(2), Pattern::matching(2), o));
}
BENCHMARK(BM_ArrowsPuncturedMatching);

static void BM_ArrowsStarStarK7(benchmark::State& state) {
    const Graph host = complete(7);
    SearchOptions o = opts(state.range(0) != 0);
    o.shape = HostShape{HostShape::Kind::Complete, 7, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(arrows(host, Pattern::star(4), Pattern::star(4), o));
}
BENCHMARK(BM_ArrowsStarStarK7)->Arg(0)->Arg(1);

static void BM_RamseyMatching23(benchmark::State& state) {
    SearchOptions o = opts(true);
    for (auto _ : state)
        benchmark::DoNotOptimize(ramsey_number(Pattern::matching(2), Pattern::matching(3), 8, o));
}
BENCHMARK(BM_RamseyMatching23);

static void BM_MaxCliqueCirculant(benchmark::State& state) {
    const Graph g = circulant(16, {1, 2, 3, 8});
    for (auto _ : state) benchmark::DoNotOptimize(max_clique(g));
}
BENCHMARK(BM_MaxCliqueCirculant);

static void BM_PathDetect(benchmark::State& state) {
    const Graph g = circulant(12, {1, 2});
    for (auto _ : state) benchmark::DoNotOptimize(contains(g, Pattern::path(10)));
}
BENCHMARK(BM_PathDetect);

static void BM_CertificateSerialize(benchmark::State& state) {
    const auto c = matching_join_coloring(2, 3);
    const auto claim = Claim::free(Pattern::matching(2), Pattern::matching(3));
    for (auto _ : state) benchmark::DoNotOptimize(serialize_certificate(c, claim, "bench"));
}
BENCHMARK(BM_CertificateSerialize);

BENCHMARK_MAIN();
