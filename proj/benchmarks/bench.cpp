#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "signedat/density.hpp"
#include "signedat/orientation.hpp"
#include "signedat/polynomial.hpp"
#include "signedat/triangulation.hpp"

namespace {

using namespace signedat;

/// A hexagonal boundary around a stacked interior: 9 vertices, 18 edges.
/// Built once; the sign pattern alternates so neither uniform special case
/// applies.
NearTriangulation hex_fixture() {
    std::vector<VertexId> names;
    for (int i = 1; i <= 9; ++i) names.push_back("v" + std::to_string(i));
    // Outer hexagon v1..v6, hub v7 on v1 v2 v3, hub v8 on v3 v4 v5, v9 on
    // v5 v6 v1; central triangle v7 v8 v9 closed through v1, v3, v5.
    std::vector<std::array<int, 3>> faces = {
        {0, 1, 6}, {1, 2, 6}, {2, 3, 7}, {3, 4, 7}, {4, 5, 8},
        {5, 0, 8}, {0, 6, 8}, {2, 6, 7}, {4, 7, 8}, {6, 7, 8},
    };
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    int toggle = 1;
    auto add = [&](int u, int v) {
        edges.emplace_back(names[static_cast<size_t>(u)], names[static_cast<size_t>(v)], toggle);
        toggle = -toggle;
    };
    for (int i = 0; i < 6; ++i) add(i, (i + 1) % 6);
    for (int u : {0, 1, 2}) add(u, 6);
    for (int u : {2, 3, 4}) add(u, 7);
    for (int u : {4, 5, 0}) add(u, 8);
    add(6, 7);
    add(7, 8);
    add(6, 8);
    NearTriangulation t{SignedGraph(names, edges), {0, 1, 2, 3, 4, 5}, faces};
    return t;
}

SignedGraph complete_negative(int n) {
    std::vector<VertexId> names;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(names[static_cast<size_t>(u)], names[static_cast<size_t>(v)], -1);
    return SignedGraph(names, edges);
}

void bm_expand_k5(benchmark::State& state) {
    SignedGraph g = complete_negative(5);
    for (auto _ : state) benchmark::DoNotOptimize(expand(g));
}
BENCHMARK(bm_expand_k5);

void bm_expand_hex(benchmark::State& state) {
    NearTriangulation t = hex_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(expand(t.graph, 24));
}
BENCHMARK(bm_expand_hex);

void bm_eulerian_imbalance_hex(benchmark::State& state) {
    NearTriangulation t = hex_fixture();
    NiceOrientationCertificate cert = at5_certificate(t);
    Orientation o = cert.orientation();
    for (auto _ : state) benchmark::DoNotOptimize(eulerian_imbalance(o));
}
BENCHMARK(bm_eulerian_imbalance_hex);

void bm_nice_orientation_hex(benchmark::State& state) {
    NearTriangulation t = hex_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(nice_orientation(t));
}
BENCHMARK(bm_nice_orientation_hex);

void bm_at5_certificate_hex(benchmark::State& state) {
    NearTriangulation t = hex_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(at5_certificate(t));
}
BENCHMARK(bm_at5_certificate_hex);

void bm_at_number_orient_k5(benchmark::State& state) {
    SignedGraph g = complete_negative(5);
    for (auto _ : state) benchmark::DoNotOptimize(at_number_orient(g));
}
BENCHMARK(bm_at_number_orient_k5);

void bm_mad_dense(benchmark::State& state) {
    // 12 vertices, moderately dense pseudo-random graph.
    std::mt19937 rng(99);
    std::vector<VertexId> names;
    for (int i = 1; i <= 12; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            if (rng() % 3 == 0)
                edges.emplace_back(names[static_cast<size_t>(u)],
                                   names[static_cast<size_t>(v)], -1);
    SignedGraph g(names, edges);
    for (auto _ : state) benchmark::DoNotOptimize(mad(g));
}
BENCHMARK(bm_mad_dense);

void bm_at_all_negative_hex(benchmark::State& state) {
    NearTriangulation t = hex_fixture();
    std::vector<std::tuple<VertexId, VertexId, int>> edges;
    for (const SignedEdge& e : t.graph.edges())
        edges.emplace_back(t.graph.vertex_name(e.lo), t.graph.vertex_name(e.hi), -1);
    SignedGraph g(t.graph.vertices(), edges);
    for (auto _ : state) benchmark::DoNotOptimize(at_all_negative(g));
}
BENCHMARK(bm_at_all_negative_hex);

} // namespace

BENCHMARK_MAIN();
