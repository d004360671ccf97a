#include "keyclass/ranking.hpp"

#include "keyclass/errors.hpp"
#include "keyclass/pg.hpp"

#include <algorithm>

namespace keyclass {

RankingTable rank(const std::map<std::string, double>& values, std::size_t top_n,
                  const std::string& metric_name) {
    if (values.empty()) throw ArgumentError("cannot rank an empty value map");
    if (top_n < 1) throw ArgumentError("top_n must be >= 1");

    RankingTable table;
    table.metric = metric_name;
    table.rows.reserve(values.size());
    for (const auto& [node, value] : values) {
        table.rows.push_back(RankingRow{0, node, value});
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const RankingRow& a, const RankingRow& b) {
                         if (a.value != b.value) return a.value > b.value;
                         return a.node < b.node;
                     });
    if (table.rows.size() > top_n) table.rows.resize(top_n);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        table.rows[i].rank = static_cast<int>(i + 1);
    }
    return table;
}

OverlapReport overlap(const RankingTable& a, const RankingTable& b) {
    if (a.rows.size() != b.rows.size()) {
        throw ArgumentError("overlap requires tables truncated to the same size (" +
                            std::to_string(a.rows.size()) + " vs " + std::to_string(b.rows.size()) +
                            ")");
    }
    std::map<std::string, int> positions_b;
    for (const auto& row : b.rows) positions_b.emplace(row.node, row.rank);

    OverlapReport report;
    report.table_a = a.metric;
    report.table_b = b.metric;
    for (const auto& row : a.rows) {
        if (auto it = positions_b.find(row.node); it != positions_b.end()) {
            report.rows.push_back(OverlapRow{row.node, row.rank, it->second});
        }
    }
    return report;
}

std::map<std::string, double> percentile_ranks(const std::map<std::string, double>& values) {
    if (values.empty()) throw ArgumentError("cannot compute percentiles of an empty value map");
    std::vector<double> sorted;
    sorted.reserve(values.size());
    for (const auto& [node, value] : values) {
        (void)node;
        sorted.push_back(value);
    }
    std::sort(sorted.begin(), sorted.end());

    std::map<std::string, double> out;
    const double n = static_cast<double>(values.size());
    for (const auto& [node, value] : values) {
        auto smaller = std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin();
        out[node] = 100.0 * static_cast<double>(smaller) / n;
    }
    return out;
}

bool TkcReport::is_flagged(const std::string& node) const {
    return std::any_of(flagged.begin(), flagged.end(),
                       [&](const auto& entry) { return entry.first == node; });
}

TkcReport tkc_flags(const ClassModel& model, const CouplingGraph& aggregation,
                    const RankingTable& normal_top, const RankingTable& reverse_top,
                    int self_ref_threshold) {
    TkcReport report;
    report.self_ref_threshold = self_ref_threshold;
    for (const auto& [name, decl] : model.classes()) {
        if (!aggregation.has_node(name) || !aggregation.has_edge(name, name)) continue;
        int static_self = 0;
        for (const auto& field : decl->fields) {
            if (field.is_static && field.type.resolved == name) ++static_self;
        }
        if (static_self >= self_ref_threshold) report.flagged.emplace_back(name, static_self);
    }
    auto in_table = [](const RankingTable& table, const std::string& node) {
        return std::any_of(table.rows.begin(), table.rows.end(),
                           [&](const RankingRow& row) { return row.node == node; });
    };
    for (const auto& [name, count] : report.flagged) {
        (void)count;
        if (in_table(normal_top, name) && in_table(reverse_top, name)) {
            report.in_both_tops.push_back(name);
        }
    }
    return report;
}

std::vector<const KeyClassRow*> KeyClassReport::keys() const {
    std::vector<const KeyClassRow*> out;
    for (const auto& row : rows) {
        if (row.is_key) out.push_back(&row);
    }
    std::sort(out.begin(), out.end(), [](const KeyClassRow* a, const KeyClassRow* b) {
        if (a->qualifying != b->qualifying) return a->qualifying > b->qualifying;
        return a->node < b->node;
    });
    return out;
}

KeyClassReport key_classes(const std::map<std::string, ClassMetrics>& metrics,
                           const std::map<std::string, double>& reverse_aggregation_pg,
                           const std::map<std::string, double>& aggregation_pg,
                           const std::map<std::string, double>& inheritance_pg,
                           const KeyClassConfig& config,
                           const std::set<std::string>& tkc_flagged) {
    if (metrics.empty()) throw ArgumentError("key_classes: empty metrics map");
    auto same_keys = [&](const std::map<std::string, double>& values) {
        if (values.size() != metrics.size()) return false;
        auto it = metrics.begin();
        for (const auto& [node, value] : values) {
            (void)value;
            if (node != it->first) return false;
            ++it;
        }
        return true;
    };
    if (!same_keys(reverse_aggregation_pg) || !same_keys(aggregation_pg) ||
        !same_keys(inheritance_pg)) {
        throw ArgumentError("key_classes: PG results cover a different class set than the metrics");
    }

    std::map<std::string, double> methods_values, attribute_values;
    for (const auto& [node, m] : metrics) {
        methods_values[node] = m.methods;
        attribute_values[node] = m.attributes;
    }
    const std::array<std::map<std::string, double>, 5> raw = {
        reverse_aggregation_pg, aggregation_pg, inheritance_pg, methods_values, attribute_values};
    std::array<std::map<std::string, double>, 5> pct;
    for (std::size_t i = 0; i < raw.size(); ++i) pct[i] = percentile_ranks(raw[i]);

    KeyClassReport report;
    report.config = config;
    for (const auto& [node, m] : metrics) {
        (void)m;
        KeyClassRow row;
        row.node = node;
        row.tkc_flagged = tkc_flagged.count(node) > 0;
        for (std::size_t i = 0; i < pct.size(); ++i) {
            row.percentiles[i] = pct[i].at(node);
            if (row.percentiles[i] >= config.percentile) {
                ++row.qualifying;
                char line[160];
                std::snprintf(line, sizeof line, "%s percentile %.2f (>= %.2f), value %s",
                              kKeyMetricNames[i], row.percentiles[i], config.percentile,
                              format_real(raw[i].at(node)).c_str());
                row.evidence.emplace_back(line);
            }
        }
        row.is_key = row.qualifying >= config.min_metrics;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace keyclass
