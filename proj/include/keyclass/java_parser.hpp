#pragma once

#include "keyclass/java_model.hpp"

#include <string_view>

namespace keyclass {

// Parses one source file in the supported Java subset: package, imports,
// class/interface/enum declarations (nested included), extends/implements,
// fields, methods, constructors. Method bodies are skipped by brace matching;
// their line counts are recorded. Comments, string literals and annotations
// never produce members or type references.
//
// Throws ParseError for unbalanced braces and unterminated comments/strings.
// A member signature the subset cannot handle is recorded on the enclosing
// class as an unparsed marker and the unit is still accepted.
CompilationUnit parse_compilation_unit(std::string_view source, const std::string& file = "");

// Renders a parsed unit back to compilable-looking source. Method bodies are
// emitted as the recorded number of blank lines so a re-parse reproduces the
// same body line counts.
std::string pretty_print(const CompilationUnit& unit);

} // namespace keyclass
