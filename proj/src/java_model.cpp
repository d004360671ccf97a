#include "keyclass/java_model.hpp"

#include "keyclass/errors.hpp"

namespace keyclass {

std::string TypeRef::simple_name() const {
    std::size_t dot = name.rfind('.');
    return dot == std::string::npos ? name : name.substr(dot + 1);
}

std::string TypeRef::text() const {
    std::string out = name;
    if (!args.empty()) {
        out += "<";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ", ";
            out += args[i].text();
        }
        out += ">";
    }
    for (int i = 0; i < array_dims; ++i) out += "[]";
    return out;
}

void TypeRef::collect_refs(std::vector<TypeRef*>& out) {
    out.push_back(this);
    for (auto& arg : args) arg.collect_refs(out);
}

void TypeRef::collect_refs(std::vector<const TypeRef*>& out) const {
    out.push_back(this);
    for (const auto& arg : args) arg.collect_refs(out);
}

const char* to_string(TypeDeclKind kind) {
    switch (kind) {
    case TypeDeclKind::Class: return "class";
    case TypeDeclKind::Interface: return "interface";
    case TypeDeclKind::Enum: return "enum";
    }
    return "unknown";
}

const ClassDecl& ClassModel::at(const std::string& qualified_name) const {
    auto it = index_.find(qualified_name);
    if (it == index_.end()) throw ArgumentError("unknown class: " + qualified_name);
    return *it->second;
}

std::vector<std::string> ClassModel::class_names() const {
    std::vector<std::string> names;
    names.reserve(index_.size());
    for (const auto& [name, decl] : index_) names.push_back(name);
    return names;
}

int ClassModel::depth_of(const std::string& qualified_name) const {
    auto it = depth_.find(qualified_name);
    if (it == depth_.end()) throw ArgumentError("unknown class: " + qualified_name);
    return it->second;
}

const std::string& ClassModel::file_of(const std::string& qualified_name) const {
    auto it = file_of_.find(qualified_name);
    if (it == file_of_.end()) throw ArgumentError("unknown class: " + qualified_name);
    return it->second;
}

} // namespace keyclass
