// Benchmark: serial reference sweep vs the OpenMP kernel on synthetic random
// digraphs, plus a check that both paths agree.

#include "keyclass/graph.hpp"
#include "keyclass/pg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

keyclass::CouplingGraph make_random_graph(std::size_t node_count, int out_degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, node_count - 1);
    std::vector<std::string> nodes;
    nodes.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        char name[24];
        std::snprintf(name, sizeof name, "n%06zu", i);
        nodes.emplace_back(name);
    }
    std::vector<keyclass::NodeEdge> edges;
    edges.reserve(node_count * static_cast<std::size_t>(out_degree));
    for (std::size_t i = 0; i < node_count; ++i) {
        for (int k = 0; k < out_degree; ++k) {
            edges.emplace_back(nodes[i], nodes[pick(rng)]);
        }
    }
    return keyclass::build_graph(keyclass::GraphKind::Generic, std::move(nodes), std::move(edges));
}

double time_run(const keyclass::CouplingGraph& g, keyclass::PGConfig config, bool parallel,
                keyclass::PGResult& out) {
    config.parallel = parallel;
    auto start = std::chrono::steady_clock::now();
    out = keyclass::potential_gain(g, config);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t node_count = 6000;
    int out_degree = 5;
    int d_max = 15;
    int repeats = 3;
    unsigned seed = 20240601;

    CLI::App app{"pg_bench - serial vs OpenMP Potential Gain sweep"};
    app.add_option("--nodes", node_count, "Node count");
    app.add_option("--degree", out_degree, "Out-degree per node");
    app.add_option("--dmax", d_max, "Maximum path depth");
    app.add_option("--repeats", repeats, "Timed repetitions, best-of");
    app.add_option("--seed", seed, "Graph seed");
    CLI11_PARSE(app, argc, argv);

    auto graph = make_random_graph(node_count, out_degree, seed);
    std::printf("graph: %zu nodes, %zu edges, d_max %d\n", graph.node_count(), graph.edge_count(),
                d_max);
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in, parallel run falls back to serial\n");
#endif

    keyclass::PGConfig config;
    config.d_max = d_max;

    keyclass::PGResult serial, parallel;
    double best_serial = 1e30, best_parallel = 1e30;
    for (int i = 0; i < repeats; ++i) {
        best_serial = std::min(best_serial, time_run(graph, config, false, serial));
        best_parallel = std::min(best_parallel, time_run(graph, config, true, parallel));
    }

    double max_rel = 0.0;
    for (std::size_t i = 0; i < serial.pg.size(); ++i) {
        double scale = std::max(1.0, std::fabs(serial.pg[i]));
        max_rel = std::max(max_rel, std::fabs(serial.pg[i] - parallel.pg[i]) / scale);
    }

    std::printf("serial:   %.4f s\n", best_serial);
    std::printf("parallel: %.4f s  (speedup %.2fx)\n", best_parallel, best_serial / best_parallel);
    std::printf("max relative difference: %.3g\n", max_rel);
    return max_rel <= 1e-12 ? 0 : 1;
}
