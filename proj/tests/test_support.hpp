#pragma once

#include "keyclass/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

// Random simple digraph with independent edge probability, self-loops
// allowed. Node names a, b, c, ... keep sorted order aligned with insertion.
inline keyclass::CouplingGraph random_graph(std::mt19937& rng, std::size_t node_count,
                                            double edge_probability) {
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < node_count; ++i) {
        nodes.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                        (i >= 26 ? std::to_string(i / 26) : ""));
    }
    std::bernoulli_distribution flip(edge_probability);
    std::vector<keyclass::NodeEdge> edges;
    for (const auto& src : nodes) {
        for (const auto& dst : nodes) {
            if (flip(rng)) edges.emplace_back(src, dst);
        }
    }
    return keyclass::build_graph(keyclass::GraphKind::Generic, std::move(nodes), std::move(edges));
}

} // namespace testsupport
