#pragma once

#include "keyclass/pg.hpp"
#include "keyclass/ranking.hpp"
#include "keyclass/report.hpp"
#include "keyclass/smells.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace keyclass {

// Shared command configuration. Exactly one of source_root / model_file /
// graph_file must be set (validated per command).
struct AnalysisConfig {
    std::string source_root;
    std::string model_file;
    std::string graph_file;
    bool lenient = false;

    PGConfig pg;
    std::vector<std::string> kinds; // --kind, repeatable

    std::size_t top_n = 15;
    // Empty picks a default: reverse-aggregation for models, the file's own
    // kind for interchange graphs.
    std::string rank_by;
    KeyClassConfig key;
    SmellThresholds smells;
    std::vector<std::string> basic_types = default_basic_types();

    std::string out_dir;             // empty = stdout
    std::string format = "markdown"; // markdown | csv | json
    bool no_summary = false;
    bool no_rankings = false;
    bool no_overlap = false;
    bool no_tkc = false;
    bool no_key = false;
    bool no_smells = false;
};

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitEmptyInput = 2;
inline constexpr int kExitInternalError = 3;

// Each command throws keyclass errors on failure; run_command maps them to
// exit codes and prints the message to err.
void cmd_analyze(const AnalysisConfig& config, std::ostream& out, std::ostream& err);
void cmd_graph(const AnalysisConfig& config, std::ostream& out, std::ostream& err);
void cmd_pg(const AnalysisConfig& config, std::ostream& out, std::ostream& err);
void cmd_rank(const AnalysisConfig& config, std::ostream& out, std::ostream& err);
void cmd_report(const AnalysisConfig& config, std::ostream& out, std::ostream& err);
void cmd_smells(const AnalysisConfig& config, std::ostream& out, std::ostream& err);

int run_command(const std::string& command, const AnalysisConfig& config, std::ostream& out,
                std::ostream& err);

// Builds (or loads) the class model named by the config. Throws
// EmptyInputError when no parseable sources are found.
ClassModel load_model(const AnalysisConfig& config, std::ostream& err);

} // namespace keyclass
