#pragma once

#include "keyclass/graph.hpp"
#include "keyclass/java_model.hpp"
#include "keyclass/metrics.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace keyclass {

struct RankingRow {
    int rank = 0; // 1-based, dense
    std::string node;
    double value = 0.0;
};

struct RankingTable {
    std::string metric;
    std::vector<RankingRow> rows; // descending value, ties by ascending name
};

// Pass top_n = values.size() (or anything >= it) for the full table.
RankingTable rank(const std::map<std::string, double>& values, std::size_t top_n,
                  const std::string& metric_name);

struct OverlapRow {
    std::string node;
    int position_a = 0;
    int position_b = 0;
};

struct OverlapReport {
    std::string table_a;
    std::string table_b;
    std::vector<OverlapRow> rows; // ordered by position in table a
};

// Both tables must hold the same number of rows.
OverlapReport overlap(const RankingTable& a, const RankingTable& b);

// percentile = 100 * (count of strictly smaller values) / (count of all values)
std::map<std::string, double> percentile_ranks(const std::map<std::string, double>& values);

struct TkcReport {
    int self_ref_threshold = 5;
    // Classes with an aggregation self-loop and at least threshold static
    // fields of their own type, with that count.
    std::vector<std::pair<std::string, int>> flagged;
    // The subset of flagged classes present in both top-k tables.
    std::vector<std::string> in_both_tops;

    bool is_flagged(const std::string& node) const;
};

TkcReport tkc_flags(const ClassModel& model, const CouplingGraph& aggregation,
                    const RankingTable& normal_top, const RankingTable& reverse_top,
                    int self_ref_threshold = 5);

struct KeyClassConfig {
    double percentile = 99.0; // P: percentile band
    int min_metrics = 3;      // M: how many of the five metrics must reach P
};

inline constexpr std::array<const char*, 5> kKeyMetricNames = {
    "reverse-aggregation PG", "aggregation PG", "inheritance PG", "methods", "attributes"};

struct KeyClassRow {
    std::string node;
    std::array<double, 5> percentiles{}; // kKeyMetricNames order
    int qualifying = 0;
    bool is_key = false;
    bool tkc_flagged = false;
    std::vector<std::string> evidence;
};

struct KeyClassReport {
    KeyClassConfig config;
    std::vector<KeyClassRow> rows; // sorted by name; keys() gives the verdict order
    std::vector<const KeyClassRow*> keys() const;
};

// A class is KEY when its percentile reaches config.percentile in at least
// config.min_metrics of {reverse-aggregation PG, aggregation PG,
// inheritance PG, methods, attributes}. TKC-flagged classes keep their
// verdict and are marked, not suppressed. All maps must cover the same
// class set.
KeyClassReport key_classes(const std::map<std::string, ClassMetrics>& metrics,
                           const std::map<std::string, double>& reverse_aggregation_pg,
                           const std::map<std::string, double>& aggregation_pg,
                           const std::map<std::string, double>& inheritance_pg,
                           const KeyClassConfig& config,
                           const std::set<std::string>& tkc_flagged = {});

} // namespace keyclass
