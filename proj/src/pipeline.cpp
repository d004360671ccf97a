#include "keyclass/pipeline.hpp"

#include "keyclass/errors.hpp"
#include "keyclass/graph_io.hpp"
#include "keyclass/model_builder.hpp"
#include "keyclass/model_json.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace keyclass {

namespace {

namespace fs = std::filesystem;

int input_mode_count(const AnalysisConfig& config) {
    return (config.source_root.empty() ? 0 : 1) + (config.model_file.empty() ? 0 : 1) +
           (config.graph_file.empty() ? 0 : 1);
}

void require_single_input(const AnalysisConfig& config, bool graph_allowed) {
    int modes = input_mode_count(config);
    if (modes != 1) {
        throw ArgumentError("exactly one of --source, --model or --graph must be given");
    }
    if (!graph_allowed && !config.graph_file.empty()) {
        throw ArgumentError("this command needs class facts; use --source or --model");
    }
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

fs::path ensure_out_dir(const std::string& out_dir) {
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory " + dir.string() + ": " + ec.message());
    return dir;
}

// Accepted spellings: the five coupling kinds plus reverse-<kind>.
std::pair<GraphKind, bool> coupling_kind(const std::string& text) {
    GraphKind kind;
    bool reversed;
    if (!parse_graph_kind(text, kind, reversed) || kind == GraphKind::Generic) {
        throw ArgumentError("unknown coupling kind '" + text + "'");
    }
    return {kind, reversed};
}

CouplingGraph graph_for_kind(const ClassModel& model, const std::string& kind_text) {
    auto [kind, reversed] = coupling_kind(kind_text);
    CouplingGraph g = build_coupling_graph(model, kind);
    return reversed ? transpose(g) : g;
}

CouplingGraph graph_from_file_for_kind(const CouplingGraph& loaded, const std::string& kind_text) {
    GraphKind kind;
    bool reversed;
    if (!parse_graph_kind(kind_text, kind, reversed)) {
        throw ArgumentError("unknown coupling kind '" + kind_text + "'");
    }
    if (kind != loaded.kind()) {
        throw ArgumentError("graph file holds kind '" + std::string(to_string(loaded.kind())) +
                            "', cannot serve '" + kind_text + "'");
    }
    return reversed == loaded.reversed() ? loaded : transpose(loaded);
}

ReportOptions report_options(const AnalysisConfig& config) {
    ReportOptions options;
    options.pg = config.pg;
    options.top_n = config.top_n;
    options.key = config.key;
    options.smells = config.smells;
    options.basic_types = config.basic_types;
    options.with_summary = !config.no_summary;
    options.with_rankings = !config.no_rankings;
    options.with_overlap = !config.no_overlap;
    options.with_tkc = !config.no_tkc;
    options.with_key = !config.no_key;
    options.with_smells = !config.no_smells;
    return options;
}

std::string ranking_to_markdown(const RankingTable& table) {
    std::string out = "| Rank | Classname | Value |\n|---|---|---|\n";
    for (const auto& row : table.rows) {
        out += "| " + std::to_string(row.rank) + " | " + row.node + " | " + format_real(row.value) +
               " |\n";
    }
    return out;
}

std::string ranking_to_csv(const RankingTable& table) {
    std::string out = "rank,node,value\n";
    for (const auto& row : table.rows) {
        out += std::to_string(row.rank) + "," + csv_escape(row.node) + "," +
               format_real(row.value) + "\n";
    }
    return out;
}

nlohmann::json ranking_to_json(const RankingTable& table) {
    nlohmann::json doc;
    doc["metric"] = table.metric;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"rank", row.rank}, {"node", row.node}, {"value", format_real(row.value)}});
    }
    doc["rows"] = std::move(rows);
    return doc;
}

} // namespace

ClassModel load_model(const AnalysisConfig& config, std::ostream& err) {
    if (!config.model_file.empty()) {
        return read_model_file(config.model_file);
    }
    std::vector<std::string> warnings;
    auto units = parse_source_tree(config.source_root, config.lenient, &warnings);
    for (const auto& warning : warnings) err << "warning: " << warning << "\n";
    if (units.empty()) {
        throw EmptyInputError("no parseable .java files under " + config.source_root);
    }
    ClassModel model = build_model(std::move(units));
    if (model.classes().empty()) {
        throw EmptyInputError("no class declarations under " + config.source_root);
    }
    return model;
}

void cmd_analyze(const AnalysisConfig& config, std::ostream& out, std::ostream& err) {
    (void)out;
    if (config.source_root.empty()) throw ArgumentError("analyze requires --source DIR");
    ClassModel model = load_model(config, err);
    fs::path dir = ensure_out_dir(config.out_dir.empty() ? "." : config.out_dir);
    fs::path path = dir / "model.json";
    write_model_file(model, path);
    err << "wrote " << path.string() << " (" << model.classes().size() << " classes)\n";
}

void cmd_graph(const AnalysisConfig& config, std::ostream& out, std::ostream& err) {
    require_single_input(config, false);
    ClassModel model = load_model(config, err);
    std::vector<std::string> kinds = config.kinds;
    if (kinds.empty()) {
        kinds = {"inheritance", "aggregation", "interface", "parameter", "return"};
    }
    const bool dot = config.format == "dot";
    if (config.format != "text" && config.format != "markdown" && !dot) {
        throw ArgumentError("graph supports --format text or dot");
    }
    if (config.out_dir.empty() && kinds.size() > 1) {
        throw ArgumentError("multiple kinds need --out DIR");
    }
    for (const auto& kind_text : kinds) {
        CouplingGraph g = graph_for_kind(model, kind_text);
        std::string content = dot ? graph_to_dot(g) : graph_to_text(g);
        if (config.out_dir.empty()) {
            out << content;
        } else {
            fs::path dir = ensure_out_dir(config.out_dir);
            fs::path path = dir / ("graph_" + kind_text + (dot ? ".dot" : ".txt"));
            write_text_file(path, content);
            err << "wrote " << path.string() << "\n";
        }
    }
}

void cmd_pg(const AnalysisConfig& config, std::ostream& out, std::ostream& err) {
    require_single_input(config, true);
    config.pg.validate();

    std::vector<std::pair<std::string, CouplingGraph>> graphs;
    if (!config.graph_file.empty()) {
        CouplingGraph loaded = read_graph_file(config.graph_file);
        if (config.kinds.empty()) {
            graphs.emplace_back(loaded.kind_label(), loaded);
        } else {
            for (const auto& kind_text : config.kinds) {
                graphs.emplace_back(kind_text, graph_from_file_for_kind(loaded, kind_text));
            }
        }
    } else {
        ClassModel model = load_model(config, err);
        std::vector<std::string> kinds = config.kinds;
        if (kinds.empty()) kinds = {"inheritance", "aggregation", "reverse-aggregation"};
        for (const auto& kind_text : kinds) {
            graphs.emplace_back(kind_text, graph_for_kind(model, kind_text));
        }
    }

    if (config.out_dir.empty() && graphs.size() > 1) {
        throw ArgumentError("multiple kinds need --out DIR");
    }
    for (const auto& [label, graph] : graphs) {
        auto start = std::chrono::steady_clock::now();
        PGResult result = potential_gain(graph, config.pg);
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        err << "pg[" << label << "]: " << graph.node_count() << " nodes, " << graph.edge_count()
            << " edges, truncated at depth " << result.r.truncated_at << ", "
            << format_real(elapsed.count()) << " s\n";
        if (config.out_dir.empty()) {
            out << pg_to_csv(result);
        } else {
            fs::path dir = ensure_out_dir(config.out_dir);
            write_text_file(dir / ("pg_" + label + ".csv"), pg_to_csv(result));
            write_text_file(dir / ("pg_" + label + ".json"), pg_to_json(result).dump(2) + "\n");
            err << "wrote " << (dir / ("pg_" + label + ".csv")).string() << " and .json\n";
        }
    }
}

void cmd_rank(const AnalysisConfig& config, std::ostream& out, std::ostream& err) {
    require_single_input(config, true);

    std::map<std::string, double> values;
    std::string metric_name = config.rank_by;
    if (!config.graph_file.empty()) {
        CouplingGraph loaded = read_graph_file(config.graph_file);
        if (metric_name.empty()) metric_name = loaded.kind_label();
        CouplingGraph g = graph_from_file_for_kind(loaded, metric_name);
        values = potential_gain(g, config.pg).pg_map();
        metric_name += " PG";
    } else {
        ClassModel model = load_model(config, err);
        if (metric_name.empty()) metric_name = "reverse-aggregation";
        if (metric_name == "methods" || metric_name == "attributes" ||
            metric_name == "constructors" || metric_name == "depth") {
            auto metrics = collect_metrics(model, build_all_graphs(model));
            for (const auto& [name, m] : metrics) {
                int v = metric_name == "methods"      ? m.methods
                        : metric_name == "attributes" ? m.attributes
                        : metric_name == "constructors" ? m.constructors
                                                        : m.depth;
                values[name] = v;
            }
        } else {
            values = potential_gain(graph_for_kind(model, metric_name), config.pg).pg_map();
            metric_name += " PG";
        }
    }

    RankingTable table = rank(values, config.top_n == 0 ? values.size() : config.top_n, metric_name);
    std::string content;
    if (config.format == "csv") content = ranking_to_csv(table);
    else if (config.format == "json") content = ranking_to_json(table).dump(2) + "\n";
    else content = ranking_to_markdown(table);
    if (config.out_dir.empty()) {
        out << content;
    } else {
        fs::path dir = ensure_out_dir(config.out_dir);
        std::string ext = config.format == "csv" ? ".csv" : config.format == "json" ? ".json" : ".md";
        std::string stem = metric_name;
        for (char& c : stem) {
            if (c == ' ') c = '_';
        }
        fs::path path = dir / ("rank_" + stem + ext);
        write_text_file(path, content);
        err << "wrote " << path.string() << "\n";
    }
}

void cmd_smells(const AnalysisConfig& config, std::ostream& out, std::ostream& err) {
    require_single_input(config, false);
    ClassModel model = load_model(config, err);
    auto metrics = collect_metrics(model, build_all_graphs(model));
    auto findings = detect_all(model, metrics, config.smells, config.basic_types);

    std::string content;
    if (config.format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& f : findings) {
            nlohmann::json item;
            item["class"] = f.class_id;
            item["smell"] = to_string(f.smell);
            if (!f.detail.empty()) item["detail"] = f.detail;
            nlohmann::json evidence = nlohmann::json::array();
            for (const auto& e : f.evidence) {
                evidence.push_back({{"label", e.label},
                                    {"value", format_real(e.value)},
                                    {"threshold", format_real(e.threshold)}});
            }
            item["evidence"] = std::move(evidence);
            item["refactorings"] = f.refactorings;
            doc.push_back(std::move(item));
        }
        content = doc.dump(2) + "\n";
    } else if (config.format == "csv") {
        content = "class,smell,evidence,refactorings\n";
        for (const auto& f : findings) {
            std::string suggestions;
            for (std::size_t i = 0; i < f.refactorings.size(); ++i) {
                if (i) suggestions += "; ";
                suggestions += f.refactorings[i];
            }
            content += csv_escape(f.class_id) + "," + to_string(f.smell) + "," +
                       csv_escape(f.evidence_text()) + "," + csv_escape(suggestions) + "\n";
        }
    } else {
        content = "| Classname | Smell | Evidence | Suggested refactorings |\n|---|---|---|---|\n";
        for (const auto& f : findings) {
            std::string suggestions;
            for (std::size_t i = 0; i < f.refactorings.size(); ++i) {
                if (i) suggestions += "; ";
                suggestions += f.refactorings[i];
            }
            content += "| " + f.class_id + " | " + to_string(f.smell) + " | " + f.evidence_text() +
                       " | " + suggestions + " |\n";
        }
    }
    if (config.out_dir.empty()) {
        out << content;
    } else {
        fs::path dir = ensure_out_dir(config.out_dir);
        std::string ext = config.format == "csv" ? ".csv" : config.format == "json" ? ".json" : ".md";
        fs::path path = dir / ("smells" + ext);
        write_text_file(path, content);
        err << "wrote " << path.string() << "\n";
    }
}

void cmd_report(const AnalysisConfig& config, std::ostream& out, std::ostream& err) {
    require_single_input(config, false);
    ClassModel model = load_model(config, err);
    Report report = build_report(model, report_options(config));

    if (config.out_dir.empty()) {
        if (config.format == "json") {
            out << report_to_json(report).dump(2) << "\n";
        } else if (config.format == "csv") {
            for (const auto& [id, csv] : report_to_csv(report)) {
                out << "# table: " << id << "\n" << csv;
            }
        } else {
            out << report_to_markdown(report);
        }
        return;
    }
    fs::path dir = ensure_out_dir(config.out_dir);
    write_text_file(dir / "report.md", report_to_markdown(report));
    write_text_file(dir / "report.json", report_to_json(report).dump(2) + "\n");
    fs::path csv_dir = dir / "csv";
    std::error_code ec;
    fs::create_directories(csv_dir, ec);
    if (ec) throw Error("cannot create " + csv_dir.string());
    for (const auto& [id, csv] : report_to_csv(report)) {
        write_text_file(csv_dir / (id + ".csv"), csv);
    }
    err << "wrote " << (dir / "report.md").string() << ", report.json and csv/\n";
}

int run_command(const std::string& command, const AnalysisConfig& config, std::ostream& out,
                std::ostream& err) {
    try {
        if (command == "analyze") cmd_analyze(config, out, err);
        else if (command == "graph") cmd_graph(config, out, err);
        else if (command == "pg") cmd_pg(config, out, err);
        else if (command == "rank") cmd_rank(config, out, err);
        else if (command == "report") cmd_report(config, out, err);
        else if (command == "smells") cmd_smells(config, out, err);
        else throw ArgumentError("unknown command '" + command + "'");
        return kExitOk;
    } catch (const EmptyInputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitEmptyInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

} // namespace keyclass
