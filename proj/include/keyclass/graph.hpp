#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace keyclass {

// The five coupling relations extracted from source, plus Generic for
// arbitrary digraphs loaded from interchange files.
enum class GraphKind { Inheritance, Aggregation, Interface, Parameter, Return, Generic };

inline constexpr int kCouplingKindCount = 5; // Generic excluded

const char* to_string(GraphKind kind);

// Parses "inheritance", "aggregation", ... and the "reverse-" prefixed forms.
// Returns false on unknown names.
bool parse_graph_kind(std::string_view text, GraphKind& kind, bool& reversed);

using NodeEdge = std::pair<std::string, std::string>;

// Immutable directed simple graph over class names. Duplicate edges collapse,
// self-loops are kept, isolated nodes are kept. Node order is sorted name
// order everywhere, which fixes the summation order downstream.
class CouplingGraph {
public:
    CouplingGraph(GraphKind kind, std::vector<std::string> nodes, std::vector<NodeEdge> edges,
                  bool reversed = false);

    GraphKind kind() const { return kind_; }
    bool reversed() const { return reversed_; }
    // "aggregation", "reverse-aggregation", ...
    std::string kind_label() const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return nodes_.empty(); }

    const std::vector<std::string>& nodes() const { return nodes_; }
    bool has_node(const std::string& name) const;
    // Index into nodes(); throws ArgumentError for unknown names.
    std::size_t index_of(const std::string& name) const;

    const std::vector<std::uint32_t>& out_edges(std::size_t index) const { return adjacency_[index]; }
    std::vector<std::string> out_neighbors(const std::string& name) const;
    std::size_t out_degree(std::size_t index) const { return adjacency_[index].size(); }
    std::size_t in_degree(std::size_t index) const { return in_degree_[index]; }
    bool has_edge(const std::string& src, const std::string& dst) const;
    // All edges as name pairs, sorted by (src, dst).
    std::vector<NodeEdge> edges() const;

    friend bool operator==(const CouplingGraph& a, const CouplingGraph& b);

private:
    GraphKind kind_;
    bool reversed_ = false;
    std::vector<std::string> nodes_;                 // sorted, unique
    std::vector<std::vector<std::uint32_t>> adjacency_; // sorted, unique per node
    std::vector<std::size_t> in_degree_;
    std::size_t edge_count_ = 0;
};

CouplingGraph build_graph(GraphKind kind, std::vector<std::string> nodes, std::vector<NodeEdge> edges);

// Same nodes, every edge reversed, reversed marker flipped. Involution.
CouplingGraph transpose(const CouplingGraph& g);

// Brute-force oracle: number of directed walks of exactly `depth` edges
// starting at `start`, counted by explicit enumeration (walks may revisit
// nodes). Exponential in depth; intended for graphs of about a dozen nodes
// and depths up to ~8.
std::uint64_t count_paths(const CouplingGraph& g, const std::string& start, int depth);

} // namespace keyclass
