#include "keyclass/pipeline.hpp"

#include "keyclass/errors.hpp"
#include "keyclass/java_parser.hpp"
#include "keyclass/model_builder.hpp"
#include "keyclass/model_json.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace keyclass;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = std::string(KEYCLASS_FIXTURE_DIR) + "/corpus";

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("keyclass_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

AnalysisConfig fixture_config() {
    AnalysisConfig config;
    config.source_root = kCorpus;
    config.key.percentile = 90.0; // 12 classes cannot reach P=99
    return config;
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("analyze writes a loadable model of 12 classes") {
    TempDir tmp;
    AnalysisConfig config = fixture_config();
    config.out_dir = tmp.path.string();
    std::ostringstream out, err;
    CHECK(run_command("analyze", config, out, err) == kExitOk);
    auto model = read_model_file(tmp.path / "model.json");
    CHECK(model.classes().size() == 12);
}

TEST_CASE("analyze on an empty directory exits 2") {
    TempDir tmp;
    AnalysisConfig config;
    config.source_root = tmp.path.string();
    config.out_dir = tmp.path.string();
    std::ostringstream out, err;
    CHECK(run_command("analyze", config, out, err) == kExitEmptyInput);
}

TEST_CASE("a malformed file fails strict mode and warns in lenient mode") {
    TempDir tmp;
    fs::create_directories(tmp.path / "src");
    std::ofstream(tmp.path / "src/Ok.java") << "package p;\nclass Ok {}\n";
    std::ofstream(tmp.path / "src/Broken.java") << "class Broken { /* unterminated\n";

    AnalysisConfig config;
    config.source_root = (tmp.path / "src").string();
    config.out_dir = tmp.path.string();
    std::ostringstream out, err;
    CHECK(run_command("analyze", config, out, err) == kExitInputError);
    CHECK(err.str().find("Broken.java") != std::string::npos);

    config.lenient = true;
    std::ostringstream out2, err2;
    CHECK(run_command("analyze", config, out2, err2) == kExitOk);
    CHECK(err2.str().find("warning: skipped") != std::string::npos);
    CHECK(read_model_file(tmp.path / "model.json").classes().size() == 1);
}

TEST_CASE("report from sources equals report from the serialized model") {
    TempDir tmp;
    AnalysisConfig analyze = fixture_config();
    analyze.out_dir = tmp.path.string();
    std::ostringstream out, err;
    REQUIRE(run_command("analyze", analyze, out, err) == kExitOk);

    AnalysisConfig from_source = fixture_config();
    std::ostringstream md_source, err1;
    REQUIRE(run_command("report", from_source, md_source, err1) == kExitOk);

    AnalysisConfig from_model = fixture_config();
    from_model.source_root.clear();
    from_model.model_file = (tmp.path / "model.json").string();
    std::ostringstream md_model, err2;
    REQUIRE(run_command("report", from_model, md_model, err2) == kExitOk);

    CHECK(md_source.str() == md_model.str());
}

TEST_CASE("report --out writes markdown, json and csv twins") {
    TempDir tmp;
    AnalysisConfig config = fixture_config();
    config.out_dir = tmp.path.string();
    std::ostringstream out, err;
    REQUIRE(run_command("report", config, out, err) == kExitOk);
    CHECK(fs::exists(tmp.path / "report.md"));
    CHECK(fs::exists(tmp.path / "report.json"));
    CHECK(fs::exists(tmp.path / "csv/summary.csv"));
    CHECK(fs::exists(tmp.path / "csv/rank_reverse_aggregation.csv"));

    // Byte-determinism across two consecutive runs.
    TempDir tmp2;
    config.out_dir = tmp2.path.string();
    std::ostringstream out2, err2;
    REQUIRE(run_command("report", config, out2, err2) == kExitOk);
    CHECK(slurp(tmp.path / "report.md") == slurp(tmp2.path / "report.md"));
    CHECK(slurp(tmp.path / "report.json") == slurp(tmp2.path / "report.json"));
}

TEST_CASE("report --format csv streams every table") {
    AnalysisConfig config = fixture_config();
    config.format = "csv";
    std::ostringstream out, err;
    REQUIRE(run_command("report", config, out, err) == kExitOk);
    for (const char* id : {"summary", "rank_reverse_aggregation", "overlap_aggregation", "tkc",
                           "key_classes", "smells"}) {
        CHECK(out.str().find("# table: " + std::string(id)) != std::string::npos);
    }
    CHECK(out.str().find("Methods,17,3") != std::string::npos);
}

TEST_CASE("rank --graph defaults to the file's own kind") {
    TempDir tmp;
    std::ofstream(tmp.path / "chain.txt")
        << "kind: return\nnodes:\na\nb\nc\nedges:\na -> b\nb -> c\n";
    AnalysisConfig config;
    config.graph_file = (tmp.path / "chain.txt").string();
    config.format = "csv";
    config.top_n = 3;
    std::ostringstream out, err;
    REQUIRE(run_command("rank", config, out, err) == kExitOk);
    CHECK(out.str().find("1,a,0.583333333333") != std::string::npos);
}

TEST_CASE("pg on a graph file prints the chain closed form") {
    TempDir tmp;
    std::ofstream(tmp.path / "chain.txt")
        << "kind: aggregation\nnodes:\na\nb\nc\nedges:\na -> b\nb -> c\n";
    AnalysisConfig config;
    config.graph_file = (tmp.path / "chain.txt").string();
    std::ostringstream out, err;
    REQUIRE(run_command("pg", config, out, err) == kExitOk);
    CHECK(out.str().find("a,0.583333333333") != std::string::npos);
    CHECK(err.str().find("3 nodes") != std::string::npos); // wall time line
}

TEST_CASE("pg rejects a kind the graph file cannot serve") {
    TempDir tmp;
    std::ofstream(tmp.path / "g.txt") << "kind: aggregation\nnodes:\na\nedges:\n";
    AnalysisConfig config;
    config.graph_file = (tmp.path / "g.txt").string();
    config.kinds = {"inheritance"};
    std::ostringstream out, err;
    CHECK(run_command("pg", config, out, err) == kExitInputError);
    config.kinds = {"bogus"};
    std::ostringstream out2, err2;
    CHECK(run_command("pg", config, out2, err2) == kExitInputError);
}

TEST_CASE("pg from the model writes one result per kind") {
    TempDir tmp;
    AnalysisConfig config = fixture_config();
    config.out_dir = tmp.path.string();
    std::ostringstream out, err;
    REQUIRE(run_command("pg", config, out, err) == kExitOk);
    CHECK(fs::exists(tmp.path / "pg_inheritance.csv"));
    CHECK(fs::exists(tmp.path / "pg_aggregation.csv"));
    CHECK(fs::exists(tmp.path / "pg_reverse-aggregation.csv"));
    CHECK(fs::exists(tmp.path / "pg_aggregation.json"));
}

TEST_CASE("pg on a sink-only graph yields zeros") {
    TempDir tmp;
    std::ofstream(tmp.path / "sinks.txt") << "kind: generic\nnodes:\nx\ny\nedges:\n";
    AnalysisConfig config;
    config.graph_file = (tmp.path / "sinks.txt").string();
    std::ostringstream out, err;
    REQUIRE(run_command("pg", config, out, err) == kExitOk);
    CHECK(out.str() == "node,pg\nx,0\ny,0\n");
}

TEST_CASE("rank by countable metrics and by PG") {
    AnalysisConfig config = fixture_config();
    config.rank_by = "methods";
    config.format = "csv";
    config.top_n = 3;
    std::ostringstream out, err;
    REQUIRE(run_command("rank", config, out, err) == kExitOk);
    CHECK(out.str().find("1,shop.core.Catalog,17") != std::string::npos);

    config.rank_by = "reverse-aggregation";
    std::ostringstream out2, err2;
    REQUIRE(run_command("rank", config, out2, err2) == kExitOk);
    CHECK(out2.str().find("rank,node,value") == 0);
}

TEST_CASE("graph command exports interchange text and dot") {
    TempDir tmp;
    AnalysisConfig config = fixture_config();
    config.kinds = {"aggregation"};
    config.format = "dot";
    std::ostringstream dot, err;
    REQUIRE(run_command("graph", config, dot, err) == kExitOk);
    CHECK(dot.str().find("digraph aggregation {") == 0);
    CHECK(dot.str().find("\"shop.model.Status\" -> \"shop.model.Status\";") != std::string::npos);

    config.format = "text";
    config.out_dir = tmp.path.string();
    config.kinds.clear();
    std::ostringstream out2, err2;
    REQUIRE(run_command("graph", config, out2, err2) == kExitOk);
    for (const char* kind : {"inheritance", "aggregation", "interface", "parameter", "return"}) {
        CHECK(fs::exists(tmp.path / ("graph_" + std::string(kind) + ".txt")));
    }
}

TEST_CASE("smells command reports the fixture findings") {
    AnalysisConfig config = fixture_config();
    config.format = "json";
    std::ostringstream out, err;
    REQUIRE(run_command("smells", config, out, err) == kExitOk);
    auto doc = nlohmann::json::parse(out.str());
    bool product_ctors = false, customer_primitives = false, catalog_long = false;
    for (const auto& item : doc) {
        if (item["class"] == "shop.model.Product" && item["smell"] == "MultipleConstructors")
            product_ctors = true;
        if (item["class"] == "shop.model.Customer" && item["smell"] == "PrimitiveObsession")
            customer_primitives = true;
        if (item["class"] == "shop.core.Catalog" && item["smell"] == "LongMethod")
            catalog_long = true;
        CHECK(item["class"] != "shop.model.Money"); // 2 constructors stays silent
    }
    CHECK(product_ctors);
    CHECK(customer_primitives);
    CHECK(catalog_long);
}

TEST_CASE("two input modes at once are rejected") {
    AnalysisConfig config = fixture_config();
    config.graph_file = "whatever.txt";
    std::ostringstream out, err;
    CHECK(run_command("report", config, out, err) == kExitInputError);
}

TEST_CASE("fixture corpus matches the hand-written expectation file") {
    auto units = parse_source_tree(kCorpus, false);
    auto model = build_model(std::move(units));
    CHECK(expectation_dump(model) == slurp(fs::path(KEYCLASS_FIXTURE_DIR) / "expected/corpus_expected.txt"));
}

TEST_CASE("re-parsing the pretty-printed fixture reproduces the model") {
    auto units = parse_source_tree(kCorpus, false);
    auto model = build_model(std::move(units));
    std::vector<CompilationUnit> reprinted;
    for (const auto& unit : model.units()) {
        auto again = parse_compilation_unit(pretty_print(unit), unit.file);
        reprinted.push_back(std::move(again));
    }
    auto model2 = build_model(std::move(reprinted));
    CHECK(model_signature(model2) == model_signature(model));
    CHECK(expectation_dump(model2) == expectation_dump(model));
}

} // TEST_SUITE
