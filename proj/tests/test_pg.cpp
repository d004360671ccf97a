#include "keyclass/pg.hpp"

#include "keyclass/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace keyclass;

namespace {

CouplingGraph chain_abc() {
    return build_graph(GraphKind::Generic, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

CouplingGraph self_loop() { return build_graph(GraphKind::Generic, {"a"}, {{"a", "a"}}); }

CouplingGraph star3() {
    return build_graph(GraphKind::Generic, {"l1", "l2", "l3", "root"},
                       {{"root", "l1"}, {"root", "l2"}, {"root", "l3"}});
}

std::vector<std::size_t> argsort_desc(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

} // namespace

TEST_SUITE("pg_engine") {

TEST_CASE("discount values") {
    PGConfig reciprocal;
    CHECK(discount_factor(reciprocal, 1) == 1.0);
    CHECK(discount_factor(reciprocal, 4) == 0.25);
    PGConfig decay;
    decay.discount = DiscountKind::Decay;
    decay.gamma = 0.5;
    CHECK(discount_factor(decay, 3) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK_THROWS_AS(discount_factor(reciprocal, 0), ArgumentError);
}

TEST_CASE("config validation") {
    PGConfig bad_dmax;
    bad_dmax.d_max = 0;
    CHECK_THROWS_AS(bad_dmax.validate(), ArgumentError);
    PGConfig bad_gamma;
    bad_gamma.discount = DiscountKind::Decay;
    bad_gamma.gamma = 1.0;
    CHECK_THROWS_AS(bad_gamma.validate(), ArgumentError);
}

TEST_CASE("R table on the chain, by hand") {
    auto table = compute_r_serial(chain_abc(), 15);
    // R_1 = (1/3, 1/3, 0); R_2 = (1/2, 0, 0); depth 3 has no surviving walk.
    CHECK(table.truncated_at == 2);
    CHECK(table.rows[0] == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(table.rows[1][0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(table.rows[1][1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(table.rows[1][2] == 0.0);
    CHECK(table.rows[2][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(table.rows[2][1] == 0.0);
    CHECK(table.rows[2][2] == 0.0);
}

TEST_CASE("single self-loop keeps R at one forever") {
    auto table = compute_r_serial(self_loop(), 9);
    CHECK(table.truncated_at == 9);
    for (const auto& row : table.rows) CHECK(row[0] == 1.0);
}

TEST_CASE("star truncates at depth one") {
    auto table = compute_r_serial(star3(), 15);
    CHECK(table.truncated_at == 1);
    // root is the 4th node in sorted order (l1, l2, l3, root)
    CHECK(table.rows[1][3] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(table.rows[1][0] == 0.0);
}

TEST_CASE("empty graph is rejected") {
    auto empty = build_graph(GraphKind::Generic, {}, {});
    CHECK_THROWS_AS(compute_r_serial(empty, 5), ArgumentError);
    PGConfig config;
    CHECK_THROWS_AS(potential_gain(empty, config), ArgumentError);
}

TEST_CASE("edgeless graph truncates at zero with all-zero PG") {
    auto g = build_graph(GraphKind::Generic, {"a", "b"}, {});
    PGConfig config;
    auto result = potential_gain(g, config);
    CHECK(result.r.truncated_at == 0);
    CHECK(result.pg == std::vector<double>{0.0, 0.0});
}

TEST_CASE("chain closed form") {
    PGConfig config; // reciprocal, d_max 15
    auto result = potential_gain(chain_abc(), config);
    CHECK(result.pg_of("a") == doctest::Approx(7.0 / 12).epsilon(1e-12));
    CHECK(result.pg_of("b") == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(result.pg_of("c") == 0.0);
}

TEST_CASE("star closed form") {
    PGConfig config;
    auto result = potential_gain(star3(), config);
    CHECK(result.pg_of("root") == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(result.pg_of("l1") == 0.0);
}

TEST_CASE("self-loop harmonic and geometric partial sums") {
    PGConfig reciprocal;
    reciprocal.d_max = 4;
    CHECK(potential_gain(self_loop(), reciprocal).pg_of("a") ==
          doctest::Approx(25.0 / 12).epsilon(1e-12));
    PGConfig decay;
    decay.discount = DiscountKind::Decay;
    decay.gamma = 0.5;
    decay.d_max = 3;
    CHECK(potential_gain(self_loop(), decay).pg_of("a") == doctest::Approx(0.875).epsilon(1e-12));
}

TEST_CASE("oracle identity: R_d equals P_d(n) / sum_j P_{d-1}(j)") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testsupport::random_graph(rng, 1 + trial % 8, 0.3);
        auto table = compute_r_serial(g, 8);
        for (int d = 1; d <= table.truncated_at; ++d) {
            std::uint64_t denom = 0;
            for (const auto& node : g.nodes()) denom += count_paths(g, node, d - 1);
            REQUIRE(denom > 0);
            for (std::size_t i = 0; i < g.node_count(); ++i) {
                double expected = static_cast<double>(count_paths(g, g.nodes()[i], d)) /
                                  static_cast<double>(denom);
                CHECK(table.rows[static_cast<std::size_t>(d)][i] ==
                      doctest::Approx(expected).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("PG result invariants: recomputable sum, sink rule, positivity") {
    std::mt19937 rng(777);
    PGConfig config;
    config.d_max = 10;
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testsupport::random_graph(rng, 1 + trial % 9, 0.25);
        auto result = potential_gain(g, config);
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            double recomputed = 0.0;
            for (int k = 1; k <= result.r.truncated_at; ++k) {
                recomputed += result.r.rows[static_cast<std::size_t>(k)][i] *
                              discount_factor(config, k);
            }
            CHECK(result.pg[i] == recomputed); // exact: same order, same terms
            CHECK(result.pg[i] >= 0.0);
            bool has_out = g.out_degree(i) > 0;
            CHECK((result.pg[i] > 0.0) == has_out);
        }
    }
}

TEST_CASE("on a DAG truncation never exceeds the longest path") {
    // Layered DAG: longest path 3.
    auto g = build_graph(GraphKind::Generic, {"a", "b", "c", "d"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "c"}});
    auto table = compute_r_serial(g, 15);
    CHECK(table.truncated_at == 3);
}

TEST_CASE("scaling the discount scales PG and keeps the order") {
    std::mt19937 rng(31);
    PGConfig config;
    auto g = testsupport::random_graph(rng, 10, 0.3);
    auto result = potential_gain(g, config);
    const double c = 3.25;
    std::vector<double> scaled(result.pg.size(), 0.0);
    for (int k = 1; k <= result.r.truncated_at; ++k) {
        double f = c * discount_factor(config, k);
        for (std::size_t i = 0; i < scaled.size(); ++i) {
            scaled[i] += result.r.rows[static_cast<std::size_t>(k)][i] * f;
        }
    }
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        CHECK(scaled[i] == doctest::Approx(c * result.pg[i]).epsilon(1e-12));
    }
    CHECK(argsort_desc(scaled) == argsort_desc(result.pg));
}

TEST_CASE("parallel sweep matches the serial reference") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = testsupport::random_graph(rng, 30 + trial * 17, 0.08);
        auto serial = compute_r_serial(g, 12);
        auto parallel = compute_r_parallel(g, 12);
        REQUIRE(serial.truncated_at == parallel.truncated_at);
        for (std::size_t d = 0; d < serial.rows.size(); ++d) {
            for (std::size_t i = 0; i < g.node_count(); ++i) {
                double a = serial.rows[d][i];
                double b = parallel.rows[d][i];
                CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
            }
        }
    }
}

TEST_CASE("two runs produce bit-identical results") {
    std::mt19937 rng(8);
    auto g = testsupport::random_graph(rng, 40, 0.1);
    PGConfig config;
    auto first = potential_gain(g, config);
    auto second = potential_gain(g, config);
    CHECK(first.pg == second.pg);
    CHECK(pg_to_csv(first) == pg_to_csv(second));
}

TEST_CASE("csv carries 12 significant digits") {
    PGConfig config;
    auto result = potential_gain(chain_abc(), config);
    std::string csv = pg_to_csv(result);
    CHECK(csv.find("node,pg,r_1,r_2") == 0);
    CHECK(csv.find("a,0.583333333333,0.333333333333,0.5") != std::string::npos);
    CHECK(csv.find("c,0") != std::string::npos);
}

TEST_CASE("json mirrors the csv digits") {
    PGConfig config;
    auto result = potential_gain(chain_abc(), config);
    auto doc = pg_to_json(result);
    CHECK(doc["truncated_at"] == 2);
    CHECK(doc["results"][0]["node"] == "a");
    CHECK(doc["results"][0]["pg"] == "0.583333333333");
    CHECK(doc["results"][0]["r"][1] == "0.5");
}

} // TEST_SUITE
