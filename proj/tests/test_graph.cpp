#include "keyclass/graph.hpp"

#include "keyclass/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace keyclass;

namespace {

CouplingGraph chain_abc() {
    return build_graph(GraphKind::Generic, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

} // namespace

TEST_SUITE("graph_core") {

TEST_CASE("duplicate edges collapse") {
    auto g = build_graph(GraphKind::Aggregation, {"a", "b"}, {{"a", "b"}, {"a", "b"}});
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge("a", "b"));
}

TEST_CASE("self-loops are kept") {
    auto g = build_graph(GraphKind::Aggregation, {"a"}, {{"a", "a"}});
    CHECK(g.edge_count() == 1);
    CHECK(g.out_neighbors("a") == std::vector<std::string>{"a"});
}

TEST_CASE("three node chain") {
    auto g = chain_abc();
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.out_neighbors("a") == std::vector<std::string>{"b"});
    CHECK(g.out_neighbors("c").empty()); // sink
}

TEST_CASE("edge endpoint missing from node set") {
    CHECK_THROWS_WITH_AS(build_graph(GraphKind::Generic, {"a"}, {{"a", "zz"}}),
                         doctest::Contains("a -> zz"), ArgumentError);
}

TEST_CASE("unknown node lookup") {
    CHECK_THROWS_AS((void)chain_abc().out_neighbors("nope"), ArgumentError);
}

TEST_CASE("isolated nodes are retained") {
    auto g = build_graph(GraphKind::Generic, {"a", "b", "c"}, {});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("transpose reverses a chain") {
    auto t = transpose(chain_abc());
    CHECK(t.has_edge("b", "a"));
    CHECK(t.has_edge("c", "b"));
    CHECK(t.edge_count() == 2);
    CHECK(t.reversed());
}

TEST_CASE("transpose fixes self-loops and empty graphs") {
    auto loop = build_graph(GraphKind::Generic, {"a"}, {{"a", "a"}});
    CHECK(transpose(loop).has_edge("a", "a"));
    auto empty_edges = build_graph(GraphKind::Generic, {"a", "b"}, {});
    CHECK(transpose(empty_edges).edge_count() == 0);
}

TEST_CASE("transpose is an involution preserving nodes and edge count") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testsupport::random_graph(rng, 1 + trial % 10, 0.3);
        auto t = transpose(g);
        CHECK(t.nodes() == g.nodes());
        CHECK(t.edge_count() == g.edge_count());
        CHECK(transpose(t) == g);
    }
}

TEST_CASE("count_paths on the chain") {
    auto g = chain_abc();
    CHECK(count_paths(g, "a", 2) == 1);
    CHECK(count_paths(g, "a", 3) == 0);
    CHECK(count_paths(g, "c", 0) == 1);
}

TEST_CASE("count_paths on a self-loop walks forever") {
    auto g = build_graph(GraphKind::Generic, {"a"}, {{"a", "a"}});
    CHECK(count_paths(g, "a", 5) == 1);
}

TEST_CASE("count_paths on a star") {
    auto g = build_graph(GraphKind::Generic, {"root", "l1", "l2", "l3"},
                         {{"root", "l1"}, {"root", "l2"}, {"root", "l3"}});
    CHECK(count_paths(g, "root", 1) == 3);
    CHECK(count_paths(g, "root", 2) == 0);
}

TEST_CASE("enumeration agrees with the out-neighbor recursion") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testsupport::random_graph(rng, 1 + trial % 8, 0.3);
        for (const auto& node : g.nodes()) {
            CHECK(count_paths(g, node, 0) == 1);
            for (int d = 1; d <= 5; ++d) {
                std::uint64_t via_recursion = 0;
                for (const auto& next : g.out_neighbors(node)) {
                    via_recursion += count_paths(g, next, d - 1);
                }
                CHECK(count_paths(g, node, d) == via_recursion);
            }
        }
    }
}

TEST_CASE("duplicate edges never change counts") {
    std::vector<NodeEdge> once = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
    std::vector<NodeEdge> twice = once;
    twice.insert(twice.end(), once.begin(), once.end());
    auto g1 = build_graph(GraphKind::Generic, {"a", "b", "c"}, once);
    auto g2 = build_graph(GraphKind::Generic, {"a", "b", "c"}, twice);
    CHECK(g1 == g2);
    for (int d = 0; d <= 6; ++d) {
        CHECK(count_paths(g1, "a", d) == count_paths(g2, "a", d));
    }
}

} // TEST_SUITE
