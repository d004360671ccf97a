#include "keyclass/smells.hpp"

#include "keyclass/errors.hpp"
#include "keyclass/pg.hpp"

#include <algorithm>
#include <cstdio>

namespace keyclass {

const char* to_string(Smell smell) {
    switch (smell) {
    case Smell::LargeClass: return "LargeClass";
    case Smell::PrimitiveObsession: return "PrimitiveObsession";
    case Smell::LongMethod: return "LongMethod";
    case Smell::MultipleConstructors: return "MultipleConstructors";
    }
    return "unknown";
}

std::string SmellFinding::evidence_text() const {
    std::string out;
    if (!detail.empty()) out += detail + ": ";
    for (std::size_t i = 0; i < evidence.size(); ++i) {
        if (i) out += ", ";
        out += evidence[i].label + " " + format_real(evidence[i].value) + " >= " +
               format_real(evidence[i].threshold);
    }
    return out;
}

bool finding_holds(const SmellFinding& finding) {
    return !finding.evidence.empty() &&
           std::all_of(finding.evidence.begin(), finding.evidence.end(),
                       [](const EvidenceItem& item) { return item.value >= item.threshold; });
}

std::vector<std::string> default_basic_types() {
    return {"boolean", "byte",  "char",   "short",   "int",     "long",    "float",
            "double",  "String", "Boolean", "Byte",   "Character", "Short", "Integer",
            "Long",    "Float", "Double"};
}

std::vector<SmellFinding> detect_large_class(const std::map<std::string, ClassMetrics>& metrics,
                                             int method_threshold) {
    std::vector<SmellFinding> findings;
    for (const auto& [name, m] : metrics) {
        if (m.methods < method_threshold) continue;
        SmellFinding f;
        f.class_id = name;
        f.smell = Smell::LargeClass;
        f.evidence.push_back({"methods", static_cast<double>(m.methods),
                              static_cast<double>(method_threshold)});
        f.refactorings = {"Extract Class", "Extract Subclass"};
        findings.push_back(std::move(f));
    }
    return findings;
}

namespace {

bool is_basic_type(const TypeRef& type, const std::vector<std::string>& basic_types) {
    // Only a plain, unresolved name counts: List<int> or int[] is a
    // container shape, not a primitive attribute.
    if (!type.resolved.empty() || type.array_dims > 0 || !type.args.empty()) return false;
    const std::string simple = type.simple_name();
    return std::find(basic_types.begin(), basic_types.end(), simple) != basic_types.end() ||
           std::find(basic_types.begin(), basic_types.end(), type.name) != basic_types.end();
}

} // namespace

std::vector<SmellFinding> detect_primitive_obsession(const ClassModel& model,
                                                     double fraction_threshold, int min_attributes,
                                                     const std::vector<std::string>& basic_types) {
    if (basic_types.empty()) throw ArgumentError("basic types list must not be empty");
    std::vector<SmellFinding> findings;
    for (const auto& [name, decl] : model.classes()) {
        const int total = static_cast<int>(decl->fields.size());
        if (total < min_attributes) continue;
        int basic = 0;
        for (const auto& field : decl->fields) {
            if (is_basic_type(field.type, basic_types)) ++basic;
        }
        double fraction = static_cast<double>(basic) / static_cast<double>(total);
        if (fraction < fraction_threshold) continue;
        SmellFinding f;
        f.class_id = name;
        f.smell = Smell::PrimitiveObsession;
        f.evidence.push_back(
            {"attributes", static_cast<double>(total), static_cast<double>(min_attributes)});
        f.evidence.push_back({"basic-typed fraction", fraction, fraction_threshold});
        f.refactorings = {"Extract Class", "Move Field"};
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<SmellFinding> detect_long_methods(const ClassModel& model, int line_threshold) {
    std::vector<SmellFinding> findings;
    for (const auto& [name, decl] : model.classes()) {
        for (const auto& method : decl->methods) {
            if (method.body_line_count < line_threshold) continue;
            SmellFinding f;
            f.class_id = name;
            f.smell = Smell::LongMethod;
            f.detail = method.name;
            f.evidence.push_back({"body lines", static_cast<double>(method.body_line_count),
                                  static_cast<double>(line_threshold)});
            f.refactorings = {"Extract Method"};
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

std::vector<SmellFinding> detect_constructor_candidates(
    const std::map<std::string, ClassMetrics>& metrics, int min_constructors) {
    std::vector<SmellFinding> findings;
    for (const auto& [name, m] : metrics) {
        if (m.constructors < min_constructors) continue;
        SmellFinding f;
        f.class_id = name;
        f.smell = Smell::MultipleConstructors;
        f.evidence.push_back({"constructors", static_cast<double>(m.constructors),
                              static_cast<double>(min_constructors)});
        f.refactorings = {"Replace Constructors with Creation Methods"};
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<SmellFinding> detect_all(const ClassModel& model,
                                     const std::map<std::string, ClassMetrics>& metrics,
                                     const SmellThresholds& thresholds,
                                     const std::vector<std::string>& basic_types) {
    std::vector<SmellFinding> findings = detect_large_class(metrics, thresholds.large_class_methods);
    auto append = [&findings](std::vector<SmellFinding> more) {
        findings.insert(findings.end(), std::make_move_iterator(more.begin()),
                        std::make_move_iterator(more.end()));
    };
    append(detect_primitive_obsession(model, thresholds.primitive_fraction,
                                      thresholds.primitive_min_attributes, basic_types));
    append(detect_long_methods(model, thresholds.long_method_lines));
    append(detect_constructor_candidates(metrics, thresholds.multiple_constructors));
    std::stable_sort(findings.begin(), findings.end(),
                     [](const SmellFinding& a, const SmellFinding& b) {
                         if (a.class_id != b.class_id) return a.class_id < b.class_id;
                         if (a.smell != b.smell) return static_cast<int>(a.smell) < static_cast<int>(b.smell);
                         return a.detail < b.detail;
                     });
    return findings;
}

} // namespace keyclass
