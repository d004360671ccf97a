#include "keyclass/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

// Options shared by every subcommand. CLI11's config support maps a config
// file with the same long keys onto these flags; explicit flags win.
void add_common_options(CLI::App* cmd, keyclass::AnalysisConfig& config, std::string& discount) {
    cmd->add_option("--source", config.source_root, "Root directory of *.java sources");
    cmd->add_option("--model", config.model_file, "Class model JSON produced by analyze");
    cmd->add_option("--graph", config.graph_file, "Graph interchange file");
    cmd->add_flag("--lenient", config.lenient, "Skip unparseable files with a warning");

    cmd->add_option("--kind", config.kinds,
                    "Coupling kind(s): inheritance, aggregation, interface, parameter, return, "
                    "or reverse-<kind>; repeatable");
    cmd->add_option("--discount", discount, "Discount function: reciprocal or decay")
        ->check(CLI::IsMember({"reciprocal", "decay"}));
    cmd->add_option("--gamma", config.pg.gamma, "Decay constant, 0 < gamma < 1");
    cmd->add_option("--dmax", config.pg.d_max, "Maximum path depth")->check(CLI::PositiveNumber);
    cmd->add_flag("--parallel", config.pg.parallel, "Use the OpenMP sweep for PG");

    cmd->add_option("--top", config.top_n, "Rows per ranking table (0 = all)");
    cmd->add_option("--key-percentile", config.key.percentile, "Key-class percentile band P");
    cmd->add_option("--key-min-metrics", config.key.min_metrics,
                    "Metrics that must reach P for a key verdict");

    cmd->add_option("--large-class-methods", config.smells.large_class_methods,
                    "LargeClass method threshold");
    cmd->add_option("--primitive-fraction", config.smells.primitive_fraction,
                    "PrimitiveObsession basic-typed fraction threshold");
    cmd->add_option("--primitive-min-attributes", config.smells.primitive_min_attributes,
                    "PrimitiveObsession minimum attribute count");
    cmd->add_option("--long-method-lines", config.smells.long_method_lines,
                    "LongMethod body line threshold");
    cmd->add_option("--self-ref-threshold", config.smells.self_ref_threshold,
                    "TKC static self-reference threshold");
    cmd->add_option("--basic-types", config.basic_types,
                    "Type names treated as primitive (replaces the default list)");

    cmd->add_option("--format", config.format, "Output format: markdown, csv, json (graph: text, dot)");
    cmd->add_option("--out", config.out_dir, "Output directory (default: stdout)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"keyclass - key-class and refactoring-candidate analysis over coupling graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --config appear after the subcommand name
    app.set_config("--config", "",
                   "INI config file; keys match the long options, in a [<subcommand>] section");

    keyclass::AnalysisConfig config;
    std::string discount = "reciprocal";

    CLI::App* analyze = app.add_subcommand("analyze", "Parse sources and write model.json");
    CLI::App* graph = app.add_subcommand("graph", "Export coupling graphs (interchange or DOT)");
    CLI::App* pg = app.add_subcommand("pg", "Compute Potential Gain per node");
    CLI::App* rank = app.add_subcommand("rank", "Rank classes by PG or a countable metric");
    rank->add_option("--by", config.rank_by,
                     "Metric: a coupling kind (PG) or methods/attributes/constructors/depth");
    CLI::App* report = app.add_subcommand("report", "Full analysis report");
    for (CLI::App* section_flags : {report}) {
        section_flags->add_flag("--no-summary", config.no_summary, "Suppress the summary section");
        section_flags->add_flag("--no-rankings", config.no_rankings, "Suppress ranking tables");
        section_flags->add_flag("--no-overlap", config.no_overlap, "Suppress overlap tables");
        section_flags->add_flag("--no-tkc", config.no_tkc, "Suppress the TKC section");
        section_flags->add_flag("--no-key", config.no_key, "Suppress the key-class section");
        section_flags->add_flag("--no-smells", config.no_smells, "Suppress the smell section");
    }
    CLI::App* smells = app.add_subcommand("smells", "Run the bad-smell detectors");

    for (CLI::App* cmd : {analyze, graph, pg, rank, report, smells}) {
        add_common_options(cmd, config, discount);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 exit codes vary; anything but a clean --help run is an input error.
        return code == 0 ? keyclass::kExitOk : keyclass::kExitInputError;
    }

    keyclass::parse_discount_kind(discount, config.pg.discount);
    return keyclass::run_command(app.get_subcommands().front()->get_name(), config, std::cout,
                                 std::cerr);
}
