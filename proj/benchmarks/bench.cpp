#include <benchmark/benchmark.h>

#include "strata/corpus.hpp"
#include "strata/sheaf.hpp"
#include "strata/unzip.hpp"

using namespace strata;

static void BM_SubdivisionHomologyTorus(benchmark::State& state) {
    auto k = corpus::complex("torus");
    for (auto _ : state) {
        auto sd = subdivide(k).sd;
        auto h = homology(sd, Field::Q);
        benchmark::DoNotOptimize(h.euler);
    }
}
BENCHMARK(BM_SubdivisionHomologyTorus);

static void BM_HomologyF2Rp2DoubleSubdivision(benchmark::State& state) {
    auto sd2 = subdivide(subdivide(corpus::complex("rp2")).sd).sd;
    for (auto _ : state) {
        auto h = homology(sd2, Field::F2);
        benchmark::DoNotOptimize(h.euler);
    }
}
BENCHMARK(BM_HomologyF2Rp2DoubleSubdivision);

static void BM_UnzipConeCircle(benchmark::State& state) {
    auto x = corpus::stratified("cone-s1");
    for (auto _ : state) {
        auto dec = unzip_once(x, {"*"});
        benchmark::DoNotOptimize(dec.link.simplex_count());
    }
}
BENCHMARK(BM_UnzipConeCircle);

static void BM_DecompositionLedgerConeSphere(benchmark::State& state) {
    auto x = corpus::stratified("cone-s2");
    auto dec = unzip_once(x, {"*"});
    for (auto _ : state) {
        auto led = decomposition_report(dec, Field::Q);
        benchmark::DoNotOptimize(led.balanced);
    }
}
BENCHMARK(BM_DecompositionLedgerConeSphere);

static void BM_ConeJoinIsomorphism(benchmark::State& state) {
    std::vector<Id> elems = {"0", "1", "2", "3"};
    std::vector<std::pair<Id, Id>> rel;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) rel.emplace_back(std::to_string(i), std::to_string(j));
    Poset p = Poset::from_relations(elems, rel);
    Poset lhs = product(cone(p), cone(p));
    Poset rhs = cone(join_poset(p, p));
    for (auto _ : state) {
        bool iso = poset_isomorphic(lhs, rhs);
        benchmark::DoNotOptimize(iso);
    }
}
BENCHMARK(BM_ConeJoinIsomorphism);

static void BM_SheafPullbackCohomology(benchmark::State& state) {
    auto ns = corpus::sheaf("monodromy-minus");
    for (auto _ : state) {
        Sheaf pb = pullback_refinement(ns.sheaf, ns.base);
        auto h = sheaf_cohomology(pb);
        benchmark::DoNotOptimize(h.euler);
    }
}
BENCHMARK(BM_SheafPullbackCohomology);

BENCHMARK_MAIN();
