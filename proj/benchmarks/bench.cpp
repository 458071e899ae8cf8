#include <benchmark/benchmark.h>

#include <sps/constructions.hpp>
#include <sps/rank.hpp>
#include <sps/search.hpp>
#include <sps/verification.hpp>

using namespace sps;

namespace {

void bm_intersection_size(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    VertexSet a(n), b(n);
    for (unsigned v = 0; v < n; v += 3) a.insert(v);
    for (unsigned v = 0; v < n; v += 5) b.insert(v);
    for (auto _ : state) benchmark::DoNotOptimize(a.intersection_size(b));
}
BENCHMARK(bm_intersection_size)->Arg(64)->Arg(512)->Arg(4096);

void bm_verify_plane_extension(benchmark::State& state) {
    const auto q = static_cast<unsigned>(state.range(0));
    const auto rec = c_family(2, q);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify(rec.system, rec.declared_profile).passed);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(rec.system.size() * rec.system.size()));
}
BENCHMARK(bm_verify_plane_extension)->Arg(5)->Arg(7)->Arg(11);

void bm_construct_final(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(final_construction(3, 23).system.size());
}
BENCHMARK(bm_construct_final);

void bm_incidence_rank(benchmark::State& state) {
    const auto sys = c_family(3, static_cast<unsigned>(state.range(0))).system;
    const auto fam = sys.a_side();
    for (auto _ : state) benchmark::DoNotOptimize(incidence_rank(fam));
}
BENCHMARK(bm_incidence_rank)->Arg(5)->Arg(7);

void bm_search_maximize(benchmark::State& state) {
    const ConstraintProfile p{2, 2, IntersectionRule::wildcard(),
                              IntersectionRule::wildcard(), IntersectionRule::one()};
    SearchLimits lim;
    for (auto _ : state) benchmark::DoNotOptimize(maximize(p, lim).best_m);
}
BENCHMARK(bm_search_maximize);

} // namespace

BENCHMARK_MAIN();
