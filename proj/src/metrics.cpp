#include "keyclass/metrics.hpp"

#include "keyclass/errors.hpp"

#include <algorithm>

namespace keyclass {

std::map<std::string, ClassMetrics> collect_metrics(const ClassModel& model,
                                                    const CouplingGraphs& graphs) {
    std::map<std::string, ClassMetrics> out;
    const std::array<const CouplingGraph*, kCouplingKindCount> kind_graphs = {
        &graphs.inheritance, &graphs.aggregation, &graphs.interfaces, &graphs.parameters,
        &graphs.returns};
    for (const auto& [name, decl] : model.classes()) {
        ClassMetrics m;
        MemberCounts counts = count_members(*decl);
        m.methods = counts.methods;
        m.attributes = counts.attributes;
        m.constructors = counts.constructors;
        m.depth = model.depth_of(name);
        for (int k = 0; k < kCouplingKindCount; ++k) {
            std::size_t index = kind_graphs[static_cast<std::size_t>(k)]->index_of(name);
            m.out_degree[static_cast<std::size_t>(k)] =
                static_cast<int>(kind_graphs[static_cast<std::size_t>(k)]->out_degree(index));
            m.in_degree[static_cast<std::size_t>(k)] =
                static_cast<int>(kind_graphs[static_cast<std::size_t>(k)]->in_degree(index));
        }
        out.emplace(name, m);
    }
    return out;
}

namespace {

// Lower median: no interpolation on even counts.
int lower_median(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

} // namespace

SummaryStats summarize(const std::map<std::string, ClassMetrics>& metrics) {
    if (metrics.empty()) throw ArgumentError("cannot summarize an empty corpus");
    std::vector<int> methods, attributes, depths;
    long ctor_total = 0;
    for (const auto& [name, m] : metrics) {
        (void)name;
        methods.push_back(m.methods);
        attributes.push_back(m.attributes);
        depths.push_back(m.depth);
        ctor_total += m.constructors;
    }
    SummaryStats stats;
    stats.methods_max = *std::max_element(methods.begin(), methods.end());
    stats.methods_median = lower_median(methods);
    stats.attributes_max = *std::max_element(attributes.begin(), attributes.end());
    stats.attributes_median = lower_median(attributes);
    stats.depth_max = *std::max_element(depths.begin(), depths.end());
    stats.depth_median = lower_median(depths);
    stats.mean_constructors = static_cast<double>(ctor_total) / static_cast<double>(metrics.size());
    return stats;
}

} // namespace keyclass
