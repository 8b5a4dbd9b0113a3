#include "msdual/canonical.hpp"
#include "msdual/crystal.hpp"
#include "msdual/enumerate.hpp"
#include "msdual/involution.hpp"
#include "msdual/quiverrep.hpp"

#include <benchmark/benchmark.h>

using namespace msdual;

namespace {

Multisegment medium_z() {
    VertexRing z = VertexRing::integers();
    return Multisegment::parse("2[0;2)+[1;3)+[0;1)+[-1;2)", z);
}

Multisegment medium_cyclic() {
    VertexRing z3 = VertexRing::cyclic(3);
    return Multisegment::parse("[0;3)+[1;2)+2[2;1)", z3);
}

void bm_f_tilde(benchmark::State& state) {
    Multisegment m = medium_cyclic();
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_tilde(m, 1));
    }
}
BENCHMARK(bm_f_tilde);

void bm_highest_weight_path(benchmark::State& state) {
    Multisegment m = medium_cyclic();
    for (auto _ : state) {
        benchmark::DoNotOptimize(highest_weight_path(m));
    }
}
BENCHMARK(bm_highest_weight_path);

void bm_tau_integers(benchmark::State& state) {
    Multisegment m = medium_z();
    for (auto _ : state) {
        benchmark::DoNotOptimize(tau(m));
    }
}
BENCHMARK(bm_tau_integers);

void bm_mw_dual(benchmark::State& state) {
    Multisegment m = medium_z();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mw_dual(m));
    }
}
BENCHMARK(bm_mw_dual);

void bm_classify_roundtrip(benchmark::State& state) {
    Multisegment m = medium_cyclic();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(realize(m)));
    }
}
BENCHMARK(bm_classify_roundtrip);

void bm_generic_dual(benchmark::State& state) {
    Multisegment m = medium_cyclic();
    unsigned long long seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generic_commutant_dual(m, seed++));
    }
}
BENCHMARK(bm_generic_dual);

void bm_hall_count(benchmark::State& state) {
    VertexRing z2 = VertexRing::cyclic(2);
    Multisegment big = Multisegment::parse("[0;2)+[0;1)+[1;1)", z2);
    Multisegment sub = Multisegment::parse("[0;1)+[1;1)", z2);
    Multisegment quot = Multisegment::parse("[0;1)+[1;1)", z2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_submodules(big, sub, quot, 3));
    }
}
BENCHMARK(bm_hall_count);

void bm_canonical_table(benchmark::State& state) {
    VertexRing z2 = VertexRing::cyclic(2);
    DimVector d(z2);
    d.add(0, 3);
    d.add(1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_basis(z2, d));
    }
}
BENCHMARK(bm_canonical_table);

void bm_crystal_graph(benchmark::State& state) {
    VertexRing z3 = VertexRing::cyclic(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crystal_graph(z3, 4));
    }
}
BENCHMARK(bm_crystal_graph);

} // namespace

BENCHMARK_MAIN();
