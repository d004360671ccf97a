#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace keyclass {

// A declared type as written in source: base name (possibly qualified),
// generic arguments, array dimensions. `resolved` is filled by build_model
// with the qualified name of the model class the base name resolves to, or
// stays empty for externals and primitives.
struct TypeRef {
    std::string name;
    std::vector<TypeRef> args;
    int array_dims = 0;
    std::string resolved;

    std::string simple_name() const;
    // Rendered as written, e.g. "Map<String, List<B>>[]".
    std::string text() const;
    // The base name plus every generic-argument name, flattened.
    void collect_refs(std::vector<TypeRef*>& out);
    void collect_refs(std::vector<const TypeRef*>& out) const;

    bool operator==(const TypeRef&) const = default;
};

struct FieldDecl {
    std::string name;
    TypeRef type;
    bool is_static = false;

    bool operator==(const FieldDecl&) const = default;
};

struct MethodDecl {
    std::string name;
    std::optional<TypeRef> return_type; // nullopt = void
    std::vector<TypeRef> params;
    int body_line_count = 0; // 0 for abstract/interface methods

    bool operator==(const MethodDecl&) const = default;
};

struct ConstructorDecl {
    std::vector<TypeRef> params;

    bool operator==(const ConstructorDecl&) const = default;
};

enum class TypeDeclKind { Class, Interface, Enum };

const char* to_string(TypeDeclKind kind);

struct ClassDecl {
    std::string simple_name;
    std::string qualified_name; // package.Outer.Inner
    TypeDeclKind kind = TypeDeclKind::Class;
    std::optional<TypeRef> superclass;  // extends, classes only
    std::vector<TypeRef> interfaces;    // implements; extends list for interfaces
    std::vector<FieldDecl> fields;      // one entry per declarator; enum constants included
    std::vector<MethodDecl> methods;    // constructors excluded
    std::vector<ConstructorDecl> constructors;
    std::vector<ClassDecl> nested;
    std::vector<std::string> unparsed_members; // raw text of members we could not parse
};

struct ImportDecl {
    std::string name;      // "p.B" or package prefix for on-demand
    bool on_demand = false; // import p.*;
};

struct CompilationUnit {
    std::string file; // diagnostics only
    std::string package_name;
    std::vector<ImportDecl> imports;
    std::vector<ClassDecl> types;
};

// Source facts for a whole corpus: every declared class (nested ones
// flattened into the index), with type references resolved and inheritance
// depths assigned. Immutable once built.
class ClassModel {
public:
    const std::vector<CompilationUnit>& units() const { return units_; }
    const std::map<std::string, const ClassDecl*>& classes() const { return index_; }
    const ClassDecl& at(const std::string& qualified_name) const;
    bool has_class(const std::string& qualified_name) const { return index_.count(qualified_name) > 0; }
    std::vector<std::string> class_names() const; // sorted

    int depth_of(const std::string& qualified_name) const;
    const std::map<std::string, int>& depths() const { return depth_; }

    const std::string& file_of(const std::string& qualified_name) const;

private:
    friend ClassModel build_model(std::vector<CompilationUnit> units);

    std::vector<CompilationUnit> units_;
    std::map<std::string, const ClassDecl*> index_;
    std::map<std::string, int> depth_;
    std::map<std::string, std::string> file_of_;
};

ClassModel build_model(std::vector<CompilationUnit> units);

} // namespace keyclass
