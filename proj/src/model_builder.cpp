#include "keyclass/model_builder.hpp"

#include "keyclass/errors.hpp"
#include "keyclass/java_parser.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace keyclass {

namespace {

// Per-unit resolution scope: the chain of enclosing classes plus the unit.
struct Scope {
    const CompilationUnit* unit = nullptr;
    std::vector<const ClassDecl*> enclosing; // innermost first
};

class Resolver {
public:
    explicit Resolver(const std::map<std::string, ClassDecl*>& index) : index_(index) {
        for (const auto& [qualified, decl] : index_) {
            (void)decl;
            std::size_t last_dot = qualified.rfind('.');
            std::string simple = last_dot == std::string::npos ? qualified : qualified.substr(last_dot + 1);
            std::string prefix = last_dot == std::string::npos ? "" : qualified.substr(0, last_dot);
            by_prefix_[prefix].emplace(simple, qualified);
        }
    }

    // Empty result means external.
    std::string resolve(const std::string& name, const Scope& scope) const {
        if (name.empty() || name == "?") return "";
        if (name.find('.') != std::string::npos) {
            if (index_.count(name)) return name;
            // Head segment may itself be a simple name in scope (Outer.Inner).
            std::size_t dot = name.find('.');
            std::string head = resolve_simple(name.substr(0, dot), scope);
            if (!head.empty()) {
                std::string candidate = head + name.substr(dot);
                if (index_.count(candidate)) return candidate;
            }
            return "";
        }
        return resolve_simple(name, scope);
    }

private:
    std::string resolve_simple(const std::string& name, const Scope& scope) const {
        // 1. Enclosing and nested types of the same unit, innermost first.
        for (const ClassDecl* decl : scope.enclosing) {
            if (decl->simple_name == name) return decl->qualified_name;
            for (const auto& nested : decl->nested) {
                if (nested.simple_name == name) return nested.qualified_name;
            }
        }
        for (const auto& top : scope.unit->types) {
            if (top.simple_name == name) return top.qualified_name;
        }
        // 2. Same package.
        if (auto hit = lookup(scope.unit->package_name, name); !hit.empty()) return hit;
        // 3. Explicit single-type imports decide the name even when the
        //    target is outside the model.
        for (const auto& imp : scope.unit->imports) {
            if (imp.on_demand) continue;
            std::size_t dot = imp.name.rfind('.');
            std::string last = dot == std::string::npos ? imp.name : imp.name.substr(dot + 1);
            if (last == name) {
                return index_.count(imp.name) ? imp.name : "";
            }
        }
        // 4. On-demand imports matched against model packages (and nested
        //    scopes, for "import p.Outer.*").
        for (const auto& imp : scope.unit->imports) {
            if (!imp.on_demand) continue;
            if (auto hit = lookup(imp.name, name); !hit.empty()) return hit;
        }
        return "";
    }

    std::string lookup(const std::string& prefix, const std::string& simple) const {
        auto scope_it = by_prefix_.find(prefix);
        if (scope_it == by_prefix_.end()) return "";
        auto it = scope_it->second.find(simple);
        return it == scope_it->second.end() ? "" : it->second;
    }

    const std::map<std::string, ClassDecl*>& index_;
    std::map<std::string, std::map<std::string, std::string>> by_prefix_;
};

void index_class(std::map<std::string, ClassDecl*>& index, std::map<std::string, std::string>& files,
                 ClassDecl& decl, const std::string& file) {
    auto [it, inserted] = index.emplace(decl.qualified_name, &decl);
    if (!inserted) {
        throw ModelError("duplicate class " + decl.qualified_name + " declared in " +
                         files.at(decl.qualified_name) + " and " + file);
    }
    files.emplace(decl.qualified_name, file);
    for (auto& nested : decl.nested) index_class(index, files, nested, file);
}

void resolve_class(ClassDecl& decl, Scope scope, const Resolver& resolver) {
    scope.enclosing.insert(scope.enclosing.begin(), &decl);
    auto resolve_ref = [&](TypeRef& ref) {
        std::vector<TypeRef*> refs;
        ref.collect_refs(refs);
        for (TypeRef* r : refs) r->resolved = resolver.resolve(r->name, scope);
    };
    if (decl.superclass) resolve_ref(*decl.superclass);
    for (auto& ref : decl.interfaces) resolve_ref(ref);
    for (auto& field : decl.fields) resolve_ref(field.type);
    for (auto& method : decl.methods) {
        if (method.return_type) resolve_ref(*method.return_type);
        for (auto& param : method.params) resolve_ref(param);
    }
    for (auto& ctor : decl.constructors) {
        for (auto& param : ctor.params) resolve_ref(param);
    }
    for (auto& nested : decl.nested) resolve_class(nested, scope, resolver);
}

int depth_of_class(const ClassModel& model, const std::string& name, std::map<std::string, int>& memo,
                   std::set<std::string>& in_progress, std::vector<std::string>& chain) {
    if (auto it = memo.find(name); it != memo.end()) return it->second;
    if (in_progress.count(name)) {
        std::string cycle;
        bool active = false;
        for (const auto& member : chain) {
            if (member == name) active = true;
            if (active) cycle += member + " -> ";
        }
        throw ModelError("inheritance cycle: " + cycle + name);
    }

    const ClassDecl& decl = model.at(name);
    int depth;
    if (decl.kind == TypeDeclKind::Interface) {
        depth = 0;
    } else if (!decl.superclass || decl.superclass->resolved.empty()) {
        depth = decl.qualified_name == "java.lang.Object" ? 0 : 1;
    } else {
        in_progress.insert(name);
        chain.push_back(name);
        depth = 1 + depth_of_class(model, decl.superclass->resolved, memo, in_progress, chain);
        chain.pop_back();
        in_progress.erase(name);
    }
    memo[name] = depth;
    return depth;
}

} // namespace

std::map<std::string, int> compute_depth(const ClassModel& model) {
    std::map<std::string, int> depths;
    std::set<std::string> in_progress;
    std::vector<std::string> chain;
    for (const auto& [name, decl] : model.classes()) {
        (void)decl;
        depth_of_class(model, name, depths, in_progress, chain);
    }
    return depths;
}

ClassModel build_model(std::vector<CompilationUnit> units) {
    std::sort(units.begin(), units.end(),
              [](const CompilationUnit& a, const CompilationUnit& b) { return a.file < b.file; });

    ClassModel model;
    model.units_ = std::move(units);

    std::map<std::string, ClassDecl*> index;
    for (auto& unit : model.units_) {
        for (auto& type : unit.types) index_class(index, model.file_of_, type, unit.file);
    }

    Resolver resolver(index);
    for (auto& unit : model.units_) {
        Scope scope;
        scope.unit = &unit;
        for (auto& type : unit.types) resolve_class(type, scope, resolver);
    }

    for (const auto& [name, decl] : index) model.index_.emplace(name, decl);
    model.depth_ = compute_depth(model);
    return model;
}

namespace {

void add_field_edges(std::vector<NodeEdge>& edges, const ClassDecl& decl) {
    for (const auto& field : decl.fields) {
        std::vector<const TypeRef*> refs;
        field.type.collect_refs(refs);
        for (const TypeRef* ref : refs) {
            if (!ref->resolved.empty()) edges.emplace_back(decl.qualified_name, ref->resolved);
        }
    }
}

void add_signature_edges(std::vector<NodeEdge>& edges, const ClassDecl& decl, bool params) {
    for (const auto& method : decl.methods) {
        if (params) {
            for (const auto& param : method.params) {
                std::vector<const TypeRef*> refs;
                param.collect_refs(refs);
                for (const TypeRef* ref : refs) {
                    if (!ref->resolved.empty()) edges.emplace_back(decl.qualified_name, ref->resolved);
                }
            }
        } else if (method.return_type) {
            std::vector<const TypeRef*> refs;
            method.return_type->collect_refs(refs);
            for (const TypeRef* ref : refs) {
                if (!ref->resolved.empty()) edges.emplace_back(decl.qualified_name, ref->resolved);
            }
        }
    }
}

} // namespace

CouplingGraph build_coupling_graph(const ClassModel& model, GraphKind kind) {
    std::vector<std::string> nodes = model.class_names();
    std::vector<NodeEdge> edges;
    for (const auto& [name, decl_ptr] : model.classes()) {
        const ClassDecl& decl = *decl_ptr;
        switch (kind) {
        case GraphKind::Inheritance:
            if (decl.superclass && !decl.superclass->resolved.empty()) {
                edges.emplace_back(decl.superclass->resolved, name);
            }
            break;
        case GraphKind::Aggregation:
            add_field_edges(edges, decl);
            break;
        case GraphKind::Interface:
            for (const auto& iface : decl.interfaces) {
                if (!iface.resolved.empty()) edges.emplace_back(iface.resolved, name);
            }
            break;
        case GraphKind::Parameter:
            add_signature_edges(edges, decl, true);
            break;
        case GraphKind::Return:
            add_signature_edges(edges, decl, false);
            break;
        case GraphKind::Generic:
            throw ArgumentError("generic is not an extractable coupling kind");
        }
    }
    return CouplingGraph(kind, std::move(nodes), std::move(edges));
}

const CouplingGraph& CouplingGraphs::by_kind(GraphKind kind) const {
    switch (kind) {
    case GraphKind::Inheritance: return inheritance;
    case GraphKind::Aggregation: return aggregation;
    case GraphKind::Interface: return interfaces;
    case GraphKind::Parameter: return parameters;
    case GraphKind::Return: return returns;
    default: throw ArgumentError("no extracted graph for this kind");
    }
}

CouplingGraphs build_all_graphs(const ClassModel& model) {
    return CouplingGraphs{
        build_coupling_graph(model, GraphKind::Inheritance),
        build_coupling_graph(model, GraphKind::Aggregation),
        build_coupling_graph(model, GraphKind::Interface),
        build_coupling_graph(model, GraphKind::Parameter),
        build_coupling_graph(model, GraphKind::Return),
    };
}

MemberCounts count_members(const ClassDecl& decl) {
    return MemberCounts{static_cast<int>(decl.methods.size()), static_cast<int>(decl.fields.size()),
                        static_cast<int>(decl.constructors.size())};
}

std::vector<CompilationUnit> parse_source_tree(const std::filesystem::path& root, bool lenient,
                                               std::vector<std::string>* warnings) {
    if (!std::filesystem::is_directory(root)) {
        throw Error("source root is not a directory: " + root.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<CompilationUnit> parsed(files.size());
    std::vector<std::string> errors(files.size());
    const auto n = static_cast<std::int64_t>(files.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& path = files[static_cast<std::size_t>(i)];
        try {
            std::ifstream in(path);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            parsed[static_cast<std::size_t>(i)] =
                parse_compilation_unit(buffer.str(), path.string());
        } catch (const Error& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }

    std::vector<CompilationUnit> units;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!errors[i].empty()) {
            if (!lenient) throw Error(errors[i]); // message already carries file:line
            if (warnings) warnings->push_back("skipped " + files[i].string() + ": " + errors[i]);
            continue;
        }
        units.push_back(std::move(parsed[i]));
    }
    return units;
}

namespace {

void dump_class_line(std::ostringstream& out, const ClassModel& model, const std::string& name) {
    const ClassDecl& decl = model.at(name);
    MemberCounts counts = count_members(decl);
    out << "class " << name << " kind=" << to_string(decl.kind) << " methods=" << counts.methods
        << " attributes=" << counts.attributes << " constructors=" << counts.constructors
        << " depth=" << model.depth_of(name) << "\n";
}

} // namespace

std::string expectation_dump(const ClassModel& model) {
    std::ostringstream out;
    for (const auto& name : model.class_names()) dump_class_line(out, model, name);
    for (GraphKind kind : {GraphKind::Inheritance, GraphKind::Aggregation, GraphKind::Interface,
                           GraphKind::Parameter, GraphKind::Return}) {
        out << "graph " << to_string(kind) << "\n";
        CouplingGraph g = build_coupling_graph(model, kind);
        for (const auto& [src, dst] : g.edges()) out << src << " -> " << dst << "\n";
    }
    return out.str();
}

namespace {

std::string ref_signature(const TypeRef& ref) {
    std::string out = ref.text();
    out += "=>";
    out += ref.resolved.empty() ? "<external>" : ref.resolved;
    std::vector<const TypeRef*> refs;
    ref.collect_refs(refs);
    for (std::size_t i = 1; i < refs.size(); ++i) {
        out += "," + refs[i]->name + "=>" +
               (refs[i]->resolved.empty() ? "<external>" : refs[i]->resolved);
    }
    return out;
}

void class_signature(std::ostringstream& out, const ClassDecl& decl, int depth) {
    out << to_string(decl.kind) << " " << decl.qualified_name << " depth=" << depth << "\n";
    if (decl.superclass) out << "  extends " << ref_signature(*decl.superclass) << "\n";
    for (const auto& iface : decl.interfaces) out << "  interface " << ref_signature(iface) << "\n";
    for (const auto& field : decl.fields) {
        out << "  field " << field.name << (field.is_static ? " static " : " ")
            << ref_signature(field.type) << "\n";
    }
    for (const auto& ctor : decl.constructors) {
        out << "  ctor(";
        for (std::size_t i = 0; i < ctor.params.size(); ++i) {
            out << (i ? "; " : "") << ref_signature(ctor.params[i]);
        }
        out << ")\n";
    }
    for (const auto& method : decl.methods) {
        out << "  method " << method.name << "(";
        for (std::size_t i = 0; i < method.params.size(); ++i) {
            out << (i ? "; " : "") << ref_signature(method.params[i]);
        }
        out << ") -> " << (method.return_type ? ref_signature(*method.return_type) : "void")
            << " lines=" << method.body_line_count << "\n";
    }
    for (const auto& raw : decl.unparsed_members) out << "  unparsed " << raw << "\n";
}

} // namespace

std::string model_signature(const ClassModel& model) {
    std::ostringstream out;
    for (const auto& name : model.class_names()) {
        class_signature(out, model.at(name), model.depth_of(name));
    }
    return out.str();
}

} // namespace keyclass
