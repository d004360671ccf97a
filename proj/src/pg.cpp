#include "keyclass/pg.hpp"

#include "keyclass/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace keyclass {

const char* to_string(DiscountKind kind) {
    return kind == DiscountKind::Reciprocal ? "reciprocal" : "decay";
}

bool parse_discount_kind(std::string_view text, DiscountKind& kind) {
    if (text == "reciprocal") {
        kind = DiscountKind::Reciprocal;
        return true;
    }
    if (text == "decay") {
        kind = DiscountKind::Decay;
        return true;
    }
    return false;
}

void PGConfig::validate() const {
    if (d_max < 1) throw ArgumentError("d_max must be >= 1");
    if (discount == DiscountKind::Decay && !(gamma > 0.0 && gamma < 1.0)) {
        throw ArgumentError("gamma must lie in the open interval (0,1)");
    }
}

double discount_factor(const PGConfig& config, int d) {
    if (d < 1) throw ArgumentError("discount is only applied for depths >= 1");
    if (config.discount == DiscountKind::Reciprocal) {
        return 1.0 / static_cast<double>(d);
    }
    // Iterated multiplication rather than pow() keeps the value identical
    // across libm implementations.
    double f = 1.0;
    for (int i = 0; i < d; ++i) f *= config.gamma;
    return f;
}

namespace {

// One depth step: row_out[n] = sum_{y in Out(n)} row_in[y] / denom.
// The denominator is accumulated serially in node order so the parallel
// sweep computes bit-identical values.
template <bool Parallel>
void r_step(const CouplingGraph& g, const std::vector<double>& row_in, std::vector<double>& row_out) {
    double denom = std::accumulate(row_in.begin(), row_in.end(), 0.0);
    const auto n = static_cast<std::int64_t>(g.node_count());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        double numerator = 0.0;
        for (std::uint32_t y : g.out_edges(static_cast<std::size_t>(i))) {
            numerator += row_in[y];
        }
        row_out[static_cast<std::size_t>(i)] = numerator / denom;
    }
}

template <bool Parallel>
RTable compute_r_impl(const CouplingGraph& g, int d_max) {
    if (g.empty()) throw ArgumentError("cannot compute R on an empty graph");
    if (d_max < 1) throw ArgumentError("d_max must be >= 1");

    RTable table;
    table.rows.emplace_back(g.node_count(), 1.0); // R_0 = 1 for every node
    table.truncated_at = 0;

    std::vector<double> row(g.node_count(), 0.0);
    for (int d = 1; d <= d_max; ++d) {
        r_step<Parallel>(g, table.rows.back(), row);
        bool all_zero = std::all_of(row.begin(), row.end(), [](double v) { return v == 0.0; });
        if (all_zero) break; // no walk of length d survives anywhere
        table.rows.push_back(row);
        table.truncated_at = d;
    }
    return table;
}

} // namespace

RTable compute_r_serial(const CouplingGraph& g, int d_max) { return compute_r_impl<false>(g, d_max); }

RTable compute_r_parallel(const CouplingGraph& g, int d_max) { return compute_r_impl<true>(g, d_max); }

RTable compute_r(const CouplingGraph& g, int d_max, bool parallel) {
    return parallel ? compute_r_parallel(g, d_max) : compute_r_serial(g, d_max);
}

double PGResult::pg_of(const std::string& node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node) throw ArgumentError("unknown node: " + node);
    return pg[static_cast<std::size_t>(it - nodes.begin())];
}

std::map<std::string, double> PGResult::pg_map() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) out[nodes[i]] = pg[i];
    return out;
}

PGResult potential_gain(const CouplingGraph& g, const PGConfig& config) {
    config.validate();
    PGResult result;
    result.config = config;
    result.nodes = g.nodes();
    result.r = compute_r(g, config.d_max, config.parallel);
    result.pg.assign(g.node_count(), 0.0);
    for (int k = 1; k <= result.r.truncated_at; ++k) {
        double f = discount_factor(config, k);
        const auto& row = result.r.rows[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < result.pg.size(); ++i) {
            result.pg[i] += row[i] * f;
        }
    }
    return result;
}

std::string format_real(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string pg_to_csv(const PGResult& result) {
    std::ostringstream out;
    out << "node,pg";
    for (int k = 1; k <= result.r.truncated_at; ++k) out << ",r_" << k;
    out << "\n";
    for (std::size_t i = 0; i < result.nodes.size(); ++i) {
        out << result.nodes[i] << "," << format_real(result.pg[i]);
        for (int k = 1; k <= result.r.truncated_at; ++k) {
            out << "," << format_real(result.r.rows[static_cast<std::size_t>(k)][i]);
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json pg_to_json(const PGResult& result) {
    nlohmann::json doc;
    doc["discount"] = to_string(result.config.discount);
    if (result.config.discount == DiscountKind::Decay) doc["gamma"] = format_real(result.config.gamma);
    doc["d_max"] = result.config.d_max;
    doc["truncated_at"] = result.r.truncated_at;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < result.nodes.size(); ++i) {
        nlohmann::json row;
        row["node"] = result.nodes[i];
        row["pg"] = format_real(result.pg[i]);
        nlohmann::json r = nlohmann::json::array();
        for (int k = 1; k <= result.r.truncated_at; ++k) {
            r.push_back(format_real(result.r.rows[static_cast<std::size_t>(k)][i]));
        }
        row["r"] = std::move(r);
        rows.push_back(std::move(row));
    }
    doc["results"] = std::move(rows);
    return doc;
}

} // namespace keyclass
