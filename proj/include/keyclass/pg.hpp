#pragma once

#include "keyclass/graph.hpp"

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace keyclass {

enum class DiscountKind { Reciprocal, Decay };

const char* to_string(DiscountKind kind);
bool parse_discount_kind(std::string_view text, DiscountKind& kind);

struct PGConfig {
    DiscountKind discount = DiscountKind::Reciprocal;
    double gamma = 0.5; // used by Decay only, must stay in (0,1)
    int d_max = 15;
    bool parallel = false; // OpenMP node sweep; numerically identical to the serial path

    void validate() const; // throws ArgumentError on out-of-range values
};

// f(d): reciprocal -> 1/d, decay -> gamma^d. Only defined for d >= 1.
double discount_factor(const PGConfig& config, int d);

// rows[d][i] is R_d of node i (nodes in sorted name order). Row 0 is all ones.
// truncated_at is the last depth with a surviving walk: the sweep stops as
// soon as a freshly computed row is all-zero, so on a DAG truncated_at never
// exceeds the longest path length and the Pg sum is exact.
struct RTable {
    std::vector<std::vector<double>> rows;
    int truncated_at = 0;
};

RTable compute_r_serial(const CouplingGraph& g, int d_max);
RTable compute_r_parallel(const CouplingGraph& g, int d_max);
RTable compute_r(const CouplingGraph& g, int d_max, bool parallel = false);

struct PGResult {
    std::vector<std::string> nodes; // sorted, parallel to pg and to RTable columns
    RTable r;
    std::vector<double> pg;
    PGConfig config;

    double pg_of(const std::string& node) const;
    std::map<std::string, double> pg_map() const;
};

// Pg(n) = sum_{k=1..truncated_at} R_k(n) * f(k). Sinks come out as 0.
PGResult potential_gain(const CouplingGraph& g, const PGConfig& config);

// 12 significant digits, plain C locale. Shared by every emitter so the same
// value always prints the same way.
std::string format_real(double value);

// Columns: node, pg, r_1..r_<truncated_at>.
std::string pg_to_csv(const PGResult& result);
// Same content; real values carried as 12-significant-digit strings so the
// JSON text matches the CSV text digit for digit.
nlohmann::json pg_to_json(const PGResult& result);

} // namespace keyclass
