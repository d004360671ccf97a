#pragma once

#include "keyclass/graph.hpp"
#include "keyclass/java_model.hpp"
#include "keyclass/model_builder.hpp"

#include <array>
#include <map>
#include <string>

namespace keyclass {

struct ClassMetrics {
    int methods = 0;
    int attributes = 0;
    int constructors = 0;
    int depth = 0;
    // Indexed by GraphKind order (inheritance, aggregation, interface,
    // parameter, return).
    std::array<int, kCouplingKindCount> out_degree{};
    std::array<int, kCouplingKindCount> in_degree{};
};

std::map<std::string, ClassMetrics> collect_metrics(const ClassModel& model,
                                                    const CouplingGraphs& graphs);

struct SummaryStats {
    int methods_max = 0;
    int methods_median = 0;
    int attributes_max = 0;
    int attributes_median = 0;
    int depth_max = 0;
    int depth_median = 0;
    double mean_constructors = 0.0; // reported to 3 decimal places
};

// Max and lower median per metric. Throws ArgumentError on an empty map.
SummaryStats summarize(const std::map<std::string, ClassMetrics>& metrics);

} // namespace keyclass
