#pragma once

#include "keyclass/java_model.hpp"
#include "keyclass/metrics.hpp"

#include <map>
#include <string>
#include <vector>

namespace keyclass {

enum class Smell { LargeClass, PrimitiveObsession, LongMethod, MultipleConstructors };

const char* to_string(Smell smell);

struct EvidenceItem {
    std::string label;
    double value = 0.0;
    double threshold = 0.0;
};

struct SmellFinding {
    std::string class_id;
    Smell smell = Smell::LargeClass;
    std::string detail; // method name for LongMethod, otherwise empty
    std::vector<EvidenceItem> evidence;
    std::vector<std::string> refactorings;

    std::string evidence_text() const;
};

// Every finding satisfies value >= threshold on all of its evidence items.
bool finding_holds(const SmellFinding& finding);

struct SmellThresholds {
    int large_class_methods = 50;
    double primitive_fraction = 0.8;
    int primitive_min_attributes = 15;
    int long_method_lines = 50;
    int multiple_constructors = 3;
    int self_ref_threshold = 5; // TKC companion knob, carried with the rest
};

// Primitives plus String and the boxed primitives; §-style "basic system
// types" treated as primitive when measuring obsession.
std::vector<std::string> default_basic_types();

std::vector<SmellFinding> detect_large_class(const std::map<std::string, ClassMetrics>& metrics,
                                             int method_threshold = 50);

std::vector<SmellFinding> detect_primitive_obsession(
    const ClassModel& model, double fraction_threshold = 0.8, int min_attributes = 15,
    const std::vector<std::string>& basic_types = default_basic_types());

std::vector<SmellFinding> detect_long_methods(const ClassModel& model, int line_threshold = 50);

std::vector<SmellFinding> detect_constructor_candidates(
    const std::map<std::string, ClassMetrics>& metrics, int min_constructors = 3);

std::vector<SmellFinding> detect_all(const ClassModel& model,
                                     const std::map<std::string, ClassMetrics>& metrics,
                                     const SmellThresholds& thresholds,
                                     const std::vector<std::string>& basic_types = default_basic_types());

} // namespace keyclass
