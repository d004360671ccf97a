#include "keyclass/model_json.hpp"

#include "keyclass/errors.hpp"

#include <fstream>

namespace keyclass {

namespace {

using nlohmann::json;

json type_ref_to_json(const TypeRef& ref) {
    json doc;
    doc["name"] = ref.name;
    if (!ref.args.empty()) {
        json args = json::array();
        for (const auto& arg : ref.args) args.push_back(type_ref_to_json(arg));
        doc["args"] = std::move(args);
    }
    if (ref.array_dims > 0) doc["array_dims"] = ref.array_dims;
    if (!ref.resolved.empty()) doc["resolved"] = ref.resolved;
    return doc;
}

TypeRef type_ref_from_json(const json& doc) {
    TypeRef ref;
    ref.name = doc.at("name").get<std::string>();
    if (doc.contains("args")) {
        for (const auto& arg : doc.at("args")) ref.args.push_back(type_ref_from_json(arg));
    }
    ref.array_dims = doc.value("array_dims", 0);
    ref.resolved = doc.value("resolved", std::string());
    return ref;
}

json class_to_json(const ClassDecl& decl) {
    json doc;
    doc["name"] = decl.simple_name;
    doc["qualified_name"] = decl.qualified_name;
    doc["kind"] = to_string(decl.kind);
    if (decl.superclass) doc["superclass"] = type_ref_to_json(*decl.superclass);
    json interfaces = json::array();
    for (const auto& iface : decl.interfaces) interfaces.push_back(type_ref_to_json(iface));
    doc["interfaces"] = std::move(interfaces);
    json fields = json::array();
    for (const auto& field : decl.fields) {
        json f;
        f["name"] = field.name;
        f["static"] = field.is_static;
        f["type"] = type_ref_to_json(field.type);
        fields.push_back(std::move(f));
    }
    doc["fields"] = std::move(fields);
    json ctors = json::array();
    for (const auto& ctor : decl.constructors) {
        json params = json::array();
        for (const auto& param : ctor.params) params.push_back(type_ref_to_json(param));
        ctors.push_back(json{{"params", std::move(params)}});
    }
    doc["constructors"] = std::move(ctors);
    json methods = json::array();
    for (const auto& method : decl.methods) {
        json m;
        m["name"] = method.name;
        if (method.return_type) m["return"] = type_ref_to_json(*method.return_type);
        json params = json::array();
        for (const auto& param : method.params) params.push_back(type_ref_to_json(param));
        m["params"] = std::move(params);
        m["body_lines"] = method.body_line_count;
        methods.push_back(std::move(m));
    }
    doc["methods"] = std::move(methods);
    if (!decl.nested.empty()) {
        json nested = json::array();
        for (const auto& n : decl.nested) nested.push_back(class_to_json(n));
        doc["nested"] = std::move(nested);
    }
    if (!decl.unparsed_members.empty()) doc["unparsed"] = decl.unparsed_members;
    return doc;
}

ClassDecl class_from_json(const json& doc) {
    ClassDecl decl;
    decl.simple_name = doc.at("name").get<std::string>();
    decl.qualified_name = doc.at("qualified_name").get<std::string>();
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "class") decl.kind = TypeDeclKind::Class;
    else if (kind == "interface") decl.kind = TypeDeclKind::Interface;
    else if (kind == "enum") decl.kind = TypeDeclKind::Enum;
    else throw Error("model json: unknown class kind '" + kind + "'");
    if (doc.contains("superclass")) decl.superclass = type_ref_from_json(doc.at("superclass"));
    for (const auto& iface : doc.at("interfaces")) decl.interfaces.push_back(type_ref_from_json(iface));
    for (const auto& f : doc.at("fields")) {
        FieldDecl field;
        field.name = f.at("name").get<std::string>();
        field.is_static = f.at("static").get<bool>();
        field.type = type_ref_from_json(f.at("type"));
        decl.fields.push_back(std::move(field));
    }
    for (const auto& c : doc.at("constructors")) {
        ConstructorDecl ctor;
        for (const auto& param : c.at("params")) ctor.params.push_back(type_ref_from_json(param));
        decl.constructors.push_back(std::move(ctor));
    }
    for (const auto& m : doc.at("methods")) {
        MethodDecl method;
        method.name = m.at("name").get<std::string>();
        if (m.contains("return")) method.return_type = type_ref_from_json(m.at("return"));
        for (const auto& param : m.at("params")) method.params.push_back(type_ref_from_json(param));
        method.body_line_count = m.at("body_lines").get<int>();
        decl.methods.push_back(std::move(method));
    }
    if (doc.contains("nested")) {
        for (const auto& n : doc.at("nested")) decl.nested.push_back(class_from_json(n));
    }
    if (doc.contains("unparsed")) {
        decl.unparsed_members = doc.at("unparsed").get<std::vector<std::string>>();
    }
    return decl;
}

} // namespace

nlohmann::json model_to_json(const ClassModel& model) {
    json doc;
    doc["schema"] = "keyclass-model/1";
    doc["conventions"] = {
        {"attributes", "declared fields only; inherited members are not counted"},
        {"enum_constants", "counted as static fields of the enum's own type"},
    };
    json units = json::array();
    for (const auto& unit : model.units()) {
        json u;
        u["file"] = unit.file;
        u["package"] = unit.package_name;
        json imports = json::array();
        for (const auto& imp : unit.imports) {
            imports.push_back(json{{"name", imp.name}, {"on_demand", imp.on_demand}});
        }
        u["imports"] = std::move(imports);
        json types = json::array();
        for (const auto& type : unit.types) types.push_back(class_to_json(type));
        u["types"] = std::move(types);
        units.push_back(std::move(u));
    }
    doc["units"] = std::move(units);
    return doc;
}

ClassModel model_from_json(const nlohmann::json& doc) {
    if (doc.value("schema", std::string()) != "keyclass-model/1") {
        throw Error("model json: unsupported or missing schema tag");
    }
    std::vector<CompilationUnit> units;
    for (const auto& u : doc.at("units")) {
        CompilationUnit unit;
        unit.file = u.at("file").get<std::string>();
        unit.package_name = u.at("package").get<std::string>();
        for (const auto& imp : u.at("imports")) {
            unit.imports.push_back(
                ImportDecl{imp.at("name").get<std::string>(), imp.at("on_demand").get<bool>()});
        }
        for (const auto& type : u.at("types")) unit.types.push_back(class_from_json(type));
        units.push_back(std::move(unit));
    }
    // Resolution is deterministic over the stored units, so rebuilding the
    // model reproduces the serialized resolved references exactly.
    return build_model(std::move(units));
}

void write_model_file(const ClassModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write model file: " + path.string());
    out << model_to_json(model).dump(2) << "\n";
}

ClassModel read_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("model json: " + std::string(e.what()));
    }
    return model_from_json(doc);
}

} // namespace keyclass
