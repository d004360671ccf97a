#pragma once

#include "keyclass/java_model.hpp"

#include <filesystem>

#include <json.hpp>

namespace keyclass {

// Schema "keyclass-model/1": every declared class with members, resolved
// type references and depths, self-contained enough to run all downstream
// stages without re-parsing sources.
nlohmann::json model_to_json(const ClassModel& model);
ClassModel model_from_json(const nlohmann::json& doc);

void write_model_file(const ClassModel& model, const std::filesystem::path& path);
ClassModel read_model_file(const std::filesystem::path& path);

} // namespace keyclass
