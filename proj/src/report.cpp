#include "keyclass/report.hpp"

#include "keyclass/errors.hpp"
#include "keyclass/model_builder.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace keyclass {

namespace {

std::string format_int(long value) { return std::to_string(value); }

std::string format_fixed(double value, int decimals) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

ReportTable ranking_section(const RankingTable& table,
                            const std::map<std::string, ClassMetrics>& metrics,
                            const std::string& id, const std::string& title) {
    ReportTable out;
    out.id = id;
    out.title = title;
    out.columns = {"Rank", "Classname", "Methods", "Attributes", "Constructors", "Depth"};
    for (const auto& row : table.rows) {
        const ClassMetrics& m = metrics.at(row.node);
        out.rows.push_back({format_int(row.rank), row.node, format_int(m.methods),
                            format_int(m.attributes), format_int(m.constructors),
                            format_int(m.depth)});
    }
    return out;
}

ReportTable overlap_section(const OverlapReport& report, const std::string& id,
                            const std::string& title, const std::string& pos_a_label,
                            const std::string& pos_b_label) {
    ReportTable out;
    out.id = id;
    out.title = title;
    out.columns = {"Classname", pos_a_label, pos_b_label};
    for (const auto& row : report.rows) {
        out.rows.push_back({row.node, format_int(row.position_a), format_int(row.position_b)});
    }
    if (report.rows.empty()) out.notes.push_back("No classes appear in both tables.");
    return out;
}

} // namespace

const ReportTable* Report::find(const std::string& id) const {
    for (const auto& table : tables) {
        if (table.id == id) return &table;
    }
    return nullptr;
}

Report build_report(const ClassModel& model, const ReportOptions& options) {
    if (model.classes().empty()) throw EmptyInputError("the model contains no classes");

    CouplingGraphs graphs = build_all_graphs(model);
    CouplingGraph reverse_aggregation = transpose(graphs.aggregation);
    auto metrics = collect_metrics(model, graphs);

    PGResult pg_agg = potential_gain(graphs.aggregation, options.pg);
    PGResult pg_revagg = potential_gain(reverse_aggregation, options.pg);
    PGResult pg_inh = potential_gain(graphs.inheritance, options.pg);

    std::size_t top_n = std::min(options.top_n, model.classes().size());
    RankingTable top_revagg = rank(pg_revagg.pg_map(), top_n, "reverse-aggregation PG");
    RankingTable top_agg = rank(pg_agg.pg_map(), top_n, "aggregation PG");
    RankingTable top_inh = rank(pg_inh.pg_map(), top_n, "inheritance PG");

    TkcReport tkc =
        tkc_flags(model, graphs.aggregation, top_agg, top_revagg, options.smells.self_ref_threshold);
    std::set<std::string> tkc_set;
    for (const auto& [name, count] : tkc.flagged) {
        (void)count;
        tkc_set.insert(name);
    }
    KeyClassReport keys = key_classes(metrics, pg_revagg.pg_map(), pg_agg.pg_map(),
                                      pg_inh.pg_map(), options.key, tkc_set);
    auto findings = detect_all(model, metrics, options.smells, options.basic_types);

    Report report;
    report.header_lines.push_back("Classes analyzed: " + format_int(static_cast<long>(model.classes().size())));
    report.header_lines.push_back(
        "Coupling edges: inheritance " + format_int(static_cast<long>(graphs.inheritance.edge_count())) +
        ", aggregation " + format_int(static_cast<long>(graphs.aggregation.edge_count())) +
        ", interface " + format_int(static_cast<long>(graphs.interfaces.edge_count())) +
        ", parameter " + format_int(static_cast<long>(graphs.parameters.edge_count())) +
        ", return " + format_int(static_cast<long>(graphs.returns.edge_count())));
    report.header_lines.push_back(
        "Config: discount=" + std::string(to_string(options.pg.discount)) +
        (options.pg.discount == DiscountKind::Decay ? " gamma=" + format_real(options.pg.gamma) : "") +
        " d_max=" + format_int(options.pg.d_max) + " top_n=" + format_int(static_cast<long>(options.top_n)) +
        " key_percentile=" + format_real(options.key.percentile) +
        " key_min_metrics=" + format_int(options.key.min_metrics));
    report.header_lines.push_back(
        "Counting conventions: attribute counts cover declared fields only (inherited members "
        "excluded); enum constants count as static fields of the enum's own type.");

    if (options.with_summary) {
        SummaryStats stats = summarize(metrics);
        ReportTable table;
        table.id = "summary";
        table.title = "Summary";
        table.columns = {"Metric", "Max", "Median"};
        table.rows = {
            {"Methods", format_int(stats.methods_max), format_int(stats.methods_median)},
            {"Attributes", format_int(stats.attributes_max), format_int(stats.attributes_median)},
            {"Depth", format_int(stats.depth_max), format_int(stats.depth_median)},
        };
        table.notes.push_back("Mean constructors per class: " +
                              format_fixed(stats.mean_constructors, 3));
        report.tables.push_back(std::move(table));
    }

    if (options.with_rankings) {
        std::string suffix = "Top " + format_int(static_cast<long>(top_n)) + " by ";
        report.tables.push_back(ranking_section(top_revagg, metrics, "rank_reverse_aggregation",
                                                suffix + "reverse aggregation PG"));
        report.tables.push_back(
            ranking_section(top_agg, metrics, "rank_aggregation", suffix + "aggregation PG"));
        report.tables.push_back(
            ranking_section(top_inh, metrics, "rank_inheritance", suffix + "inheritance PG"));
    }

    if (options.with_overlap) {
        report.tables.push_back(overlap_section(
            overlap(top_revagg, top_agg), "overlap_aggregation",
            "Overlap: reverse vs normal aggregation PG", "Reverse PG", "PG"));
        report.tables.push_back(overlap_section(
            overlap(top_revagg, top_inh), "overlap_inheritance",
            "Overlap: reverse aggregation vs inheritance PG", "Reverse PG", "Inheritance PG"));
    }

    if (options.with_tkc) {
        ReportTable table;
        table.id = "tkc";
        table.title = "Tightly knit community candidates";
        table.columns = {"Classname", "Static self-references", "In both aggregation top lists"};
        for (const auto& [name, count] : tkc.flagged) {
            bool in_both = std::find(tkc.in_both_tops.begin(), tkc.in_both_tops.end(), name) !=
                           tkc.in_both_tops.end();
            table.rows.push_back({name, format_int(count), in_both ? "yes" : "no"});
        }
        table.notes.push_back("Flag rule: aggregation self-loop and at least " +
                              format_int(options.smells.self_ref_threshold) +
                              " static fields of the class's own type.");
        if (table.rows.empty()) table.notes.push_back("No self-referencing clusters found.");
        report.tables.push_back(std::move(table));
    }

    if (options.with_key) {
        ReportTable table;
        table.id = "key_classes";
        table.title = "Key classes";
        table.columns = {"Classname", "RevAgg PG pct", "Agg PG pct", "Inherit PG pct",
                         "Methods pct", "Attributes pct", "Metrics at P", "TKC"};
        for (const KeyClassRow* row : keys.keys()) {
            table.rows.push_back({row->node, format_fixed(row->percentiles[0], 2),
                                  format_fixed(row->percentiles[1], 2),
                                  format_fixed(row->percentiles[2], 2),
                                  format_fixed(row->percentiles[3], 2),
                                  format_fixed(row->percentiles[4], 2),
                                  format_int(row->qualifying), row->tkc_flagged ? "yes" : "no"});
        }
        table.notes.push_back(
            "Key rule: percentile >= " + format_real(options.key.percentile) + " in at least " +
            format_int(options.key.min_metrics) +
            " of {reverse-aggregation PG, aggregation PG, inheritance PG, methods, attributes}.");
        if (table.rows.empty()) table.notes.push_back("No class meets the key rule.");
        report.tables.push_back(std::move(table));
    }

    if (options.with_smells) {
        ReportTable table;
        table.id = "smells";
        table.title = "Bad smells";
        table.columns = {"Classname", "Smell", "Evidence", "Suggested refactorings"};
        for (const auto& finding : findings) {
            std::string suggestions;
            for (std::size_t i = 0; i < finding.refactorings.size(); ++i) {
                if (i) suggestions += "; ";
                suggestions += finding.refactorings[i];
            }
            table.rows.push_back(
                {finding.class_id, to_string(finding.smell), finding.evidence_text(), suggestions});
        }
        if (table.rows.empty()) table.notes.push_back("No findings at the configured thresholds.");
        report.tables.push_back(std::move(table));
    }
    return report;
}

std::string report_to_markdown(const Report& report) {
    std::ostringstream out;
    out << "# Key class analysis\n\n";
    for (const auto& line : report.header_lines) out << line << "\n";
    for (const auto& table : report.tables) {
        out << "\n## " << table.title << "\n\n";
        if (!table.rows.empty()) {
            out << "|";
            for (const auto& col : table.columns) out << " " << col << " |";
            out << "\n|";
            for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---|";
            out << "\n";
            for (const auto& row : table.rows) {
                out << "|";
                for (const auto& cell : row) out << " " << cell << " |";
                out << "\n";
            }
        }
        for (const auto& note : table.notes) out << "\n" << note << "\n";
    }
    return out.str();
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json doc;
    doc["header"] = report.header_lines;
    nlohmann::json tables = nlohmann::json::array();
    for (const auto& table : report.tables) {
        nlohmann::json t;
        t["id"] = table.id;
        t["title"] = table.title;
        t["columns"] = table.columns;
        t["rows"] = table.rows;
        t["notes"] = table.notes;
        tables.push_back(std::move(t));
    }
    doc["tables"] = std::move(tables);
    return doc;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::map<std::string, std::string> report_to_csv(const Report& report) {
    std::map<std::string, std::string> out;
    for (const auto& table : report.tables) {
        std::ostringstream csv;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            csv << (i ? "," : "") << csv_escape(table.columns[i]);
        }
        csv << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                csv << (i ? "," : "") << csv_escape(row[i]);
            }
            csv << "\n";
        }
        out.emplace(table.id, csv.str());
    }
    return out;
}

} // namespace keyclass
