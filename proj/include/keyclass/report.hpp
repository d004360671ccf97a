#pragma once

#include "keyclass/java_model.hpp"
#include "keyclass/metrics.hpp"
#include "keyclass/pg.hpp"
#include "keyclass/ranking.hpp"
#include "keyclass/smells.hpp"

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace keyclass {

struct ReportOptions {
    PGConfig pg;
    std::size_t top_n = 15;
    KeyClassConfig key;
    SmellThresholds smells;
    std::vector<std::string> basic_types = default_basic_types();
    bool with_summary = true;
    bool with_rankings = true;
    bool with_overlap = true;
    bool with_tkc = true;
    bool with_key = true;
    bool with_smells = true;
};

struct ReportTable {
    std::string id;    // stable identifier, used as the CSV file name
    std::string title; // markdown heading
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // preformatted cells
    std::vector<std::string> notes;             // prose lines under the table
};

// Cells are formatted exactly once; the markdown, CSV and JSON renderers all
// reuse the same strings, so a number never prints two different ways.
struct Report {
    std::vector<std::string> header_lines;
    std::vector<ReportTable> tables;

    const ReportTable* find(const std::string& id) const;
};

Report build_report(const ClassModel& model, const ReportOptions& options);

std::string report_to_markdown(const Report& report);
nlohmann::json report_to_json(const Report& report);
// One CSV document per table, keyed by table id.
std::map<std::string, std::string> report_to_csv(const Report& report);

std::string csv_escape(const std::string& cell);

} // namespace keyclass
