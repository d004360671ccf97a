#include "keyclass/graph_io.hpp"

#include "keyclass/errors.hpp"

#include <fstream>
#include <sstream>

namespace keyclass {

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

std::string dot_escape(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

CouplingGraph parse_graph_text(std::string_view text, const std::string& origin) {
    enum class Section { Header, Nodes, Edges } section = Section::Header;
    GraphKind kind = GraphKind::Generic;
    bool reversed = false;
    bool kind_seen = false;
    std::vector<std::string> nodes;
    std::vector<NodeEdge> edges;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (!kind_seen) {
            if (line.rfind("kind:", 0) != 0) {
                throw ParseError(origin, line_no, "expected 'kind: <name>' header, got '" + line + "'");
            }
            std::string name = trim(line.substr(5));
            if (!parse_graph_kind(name, kind, reversed)) {
                throw ParseError(origin, line_no, "unknown graph kind '" + name + "'");
            }
            kind_seen = true;
            continue;
        }
        if (line == "nodes:") {
            section = Section::Nodes;
            continue;
        }
        if (line == "edges:") {
            if (section != Section::Nodes) {
                throw ParseError(origin, line_no, "'edges:' section before 'nodes:'");
            }
            section = Section::Edges;
            continue;
        }
        switch (section) {
        case Section::Header:
            throw ParseError(origin, line_no, "expected 'nodes:' section, got '" + line + "'");
        case Section::Nodes:
            nodes.push_back(line);
            break;
        case Section::Edges: {
            std::size_t arrow = line.find("->");
            if (arrow == std::string::npos) {
                throw ParseError(origin, line_no, "expected '<src> -> <dst>', got '" + line + "'");
            }
            std::string src = trim(std::string_view(line).substr(0, arrow));
            std::string dst = trim(std::string_view(line).substr(arrow + 2));
            if (src.empty() || dst.empty()) {
                throw ParseError(origin, line_no, "edge with empty endpoint: '" + line + "'");
            }
            edges.emplace_back(std::move(src), std::move(dst));
            break;
        }
        }
    }
    if (!kind_seen) {
        throw ParseError(origin, line_no, "missing 'kind:' header");
    }
    try {
        return CouplingGraph(kind, std::move(nodes), std::move(edges), reversed);
    } catch (const ArgumentError& e) {
        throw ParseError(origin, line_no, e.what());
    }
}

std::string graph_to_text(const CouplingGraph& g) {
    std::ostringstream out;
    out << "kind: " << g.kind_label() << "\n";
    out << "nodes:\n";
    for (const auto& n : g.nodes()) out << n << "\n";
    out << "edges:\n";
    for (const auto& [src, dst] : g.edges()) out << src << " -> " << dst << "\n";
    return out.str();
}

CouplingGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str(), path.string());
}

void write_graph_file(const CouplingGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write graph file: " + path.string());
    out << graph_to_text(g);
}

std::string graph_to_dot(const CouplingGraph& g) {
    std::string name = g.kind_label();
    for (char& c : name) {
        if (c == '-') c = '_';
    }
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    std::vector<bool> connected(g.node_count(), false);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        for (std::uint32_t dst : g.out_edges(i)) {
            connected[i] = true;
            connected[dst] = true;
        }
    }
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (!connected[i]) out << "  \"" << dot_escape(g.nodes()[i]) << "\";\n";
    }
    for (const auto& [src, dst] : g.edges()) {
        out << "  \"" << dot_escape(src) << "\" -> \"" << dot_escape(dst) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

void write_dot_file(const CouplingGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write dot file: " + path.string());
    out << graph_to_dot(g);
}

} // namespace keyclass
