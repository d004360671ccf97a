#include "keyclass/graph.hpp"

#include "keyclass/errors.hpp"

#include <algorithm>

namespace keyclass {

const char* to_string(GraphKind kind) {
    switch (kind) {
    case GraphKind::Inheritance: return "inheritance";
    case GraphKind::Aggregation: return "aggregation";
    case GraphKind::Interface: return "interface";
    case GraphKind::Parameter: return "parameter";
    case GraphKind::Return: return "return";
    case GraphKind::Generic: return "generic";
    }
    return "unknown";
}

bool parse_graph_kind(std::string_view text, GraphKind& kind, bool& reversed) {
    reversed = false;
    constexpr std::string_view prefix = "reverse-";
    if (text.substr(0, prefix.size()) == prefix) {
        reversed = true;
        text.remove_prefix(prefix.size());
    }
    for (GraphKind k : {GraphKind::Inheritance, GraphKind::Aggregation, GraphKind::Interface,
                        GraphKind::Parameter, GraphKind::Return, GraphKind::Generic}) {
        if (text == to_string(k)) {
            kind = k;
            return true;
        }
    }
    return false;
}

CouplingGraph::CouplingGraph(GraphKind kind, std::vector<std::string> nodes,
                             std::vector<NodeEdge> edges, bool reversed)
    : kind_(kind), reversed_(reversed), nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());

    adjacency_.assign(nodes_.size(), {});
    for (const auto& [src, dst] : edges) {
        auto src_it = std::lower_bound(nodes_.begin(), nodes_.end(), src);
        auto dst_it = std::lower_bound(nodes_.begin(), nodes_.end(), dst);
        if (src_it == nodes_.end() || *src_it != src || dst_it == nodes_.end() || *dst_it != dst) {
            throw ArgumentError("edge (" + src + " -> " + dst + ") references a node not in the node set");
        }
        adjacency_[static_cast<std::size_t>(src_it - nodes_.begin())].push_back(
            static_cast<std::uint32_t>(dst_it - nodes_.begin()));
    }
    in_degree_.assign(nodes_.size(), 0);
    for (auto& successors : adjacency_) {
        std::sort(successors.begin(), successors.end());
        successors.erase(std::unique(successors.begin(), successors.end()), successors.end());
        edge_count_ += successors.size();
        for (std::uint32_t dst : successors) in_degree_[dst]++;
    }
}

std::string CouplingGraph::kind_label() const {
    std::string label = to_string(kind_);
    return reversed_ ? "reverse-" + label : label;
}

bool CouplingGraph::has_node(const std::string& name) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), name);
}

std::size_t CouplingGraph::index_of(const std::string& name) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
    if (it == nodes_.end() || *it != name) {
        throw ArgumentError("unknown node: " + name);
    }
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<std::string> CouplingGraph::out_neighbors(const std::string& name) const {
    std::vector<std::string> result;
    for (std::uint32_t dst : adjacency_[index_of(name)]) {
        result.push_back(nodes_[dst]);
    }
    return result;
}

bool CouplingGraph::has_edge(const std::string& src, const std::string& dst) const {
    const auto& successors = adjacency_[index_of(src)];
    return std::binary_search(successors.begin(), successors.end(),
                              static_cast<std::uint32_t>(index_of(dst)));
}

std::vector<NodeEdge> CouplingGraph::edges() const {
    std::vector<NodeEdge> result;
    result.reserve(edge_count_);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::uint32_t dst : adjacency_[i]) {
            result.emplace_back(nodes_[i], nodes_[dst]);
        }
    }
    return result;
}

bool operator==(const CouplingGraph& a, const CouplingGraph& b) {
    return a.kind_ == b.kind_ && a.reversed_ == b.reversed_ && a.nodes_ == b.nodes_ &&
           a.adjacency_ == b.adjacency_;
}

CouplingGraph build_graph(GraphKind kind, std::vector<std::string> nodes, std::vector<NodeEdge> edges) {
    return CouplingGraph(kind, std::move(nodes), std::move(edges));
}

CouplingGraph transpose(const CouplingGraph& g) {
    std::vector<NodeEdge> reversed_edges;
    reversed_edges.reserve(g.edge_count());
    for (auto& [src, dst] : g.edges()) {
        reversed_edges.emplace_back(dst, src);
    }
    return CouplingGraph(g.kind(), g.nodes(), std::move(reversed_edges), !g.reversed());
}

namespace {

std::uint64_t count_walks_from(const CouplingGraph& g, std::size_t node, int remaining) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (std::uint32_t next : g.out_edges(node)) {
        total += count_walks_from(g, next, remaining - 1);
    }
    return total;
}

} // namespace

std::uint64_t count_paths(const CouplingGraph& g, const std::string& start, int depth) {
    if (depth < 0) throw ArgumentError("count_paths: depth must be >= 0");
    return count_walks_from(g, g.index_of(start), depth);
}

} // namespace keyclass
