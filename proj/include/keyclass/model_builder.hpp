#pragma once

#include "keyclass/graph.hpp"
#include "keyclass/java_model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace keyclass {

// Recomputes inheritance depths from the resolved model: interfaces sit at 0,
// classes whose parent is missing or external sit at 1 (java.lang.Object
// itself at 0), everything else one below its parent. Throws ModelError on
// extends cycles, listing the cycle.
std::map<std::string, int> compute_depth(const ClassModel& model);

// Nodes are all model classes; edges depend on the kind:
//   inheritance: parent -> child per resolved extends link
//   aggregation: A -> B for every field of A whose declared type, array
//                element type or generic argument resolves to B
//   interface:   interface -> implementer per resolved implements link
//   parameter:   A -> B for every method parameter of A resolving to B
//   return:      A -> B for every method return type of A resolving to B
CouplingGraph build_coupling_graph(const ClassModel& model, GraphKind kind);

struct CouplingGraphs {
    CouplingGraph inheritance;
    CouplingGraph aggregation;
    CouplingGraph interfaces;
    CouplingGraph parameters;
    CouplingGraph returns;

    const CouplingGraph& by_kind(GraphKind kind) const;
};

CouplingGraphs build_all_graphs(const ClassModel& model);

struct MemberCounts {
    int methods = 0;
    int attributes = 0;
    int constructors = 0;
};

// Methods exclude constructors; attributes count field declarators,
// visibility and staticness notwithstanding.
MemberCounts count_members(const ClassDecl& decl);

// Parses every *.java under root (sorted path order; files go through an
// OpenMP fan-out when available). In lenient mode files that fail to parse
// are skipped with a warning pushed to `warnings`; otherwise the first
// failure (in sorted order) is rethrown.
std::vector<CompilationUnit> parse_source_tree(const std::filesystem::path& root, bool lenient,
                                               std::vector<std::string>* warnings = nullptr);

// Canonical per-class counts, depths and the five edge sets. This is the
// text the fixture expectation file freezes.
std::string expectation_dump(const ClassModel& model);

// Full structural fingerprint (members, types, resolution targets, body line
// counts). Two models with equal signatures are interchangeable downstream.
std::string model_signature(const ClassModel& model);

} // namespace keyclass
