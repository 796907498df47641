#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mvp/cli.hpp"
#include "mvp/csv.hpp"
#include "mvp/model_io.hpp"

using namespace mvp;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    const auto dir = fs::temp_directory_path() / "mvp_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

} // namespace

TEST_CASE("the generate/discover/project/render pipeline runs end to end") {
    const auto dir = work_dir();
    const auto log_csv = (dir / "log.csv").string();
    const auto model_json = (dir / "model.json").string();

    CHECK(cli::run({"generate", "--events", "200", "--activities", "6", "--classes", "2",
                    "--objects-per-class", "8", "--seed", "3", "--output", log_csv}) == 0);
    CHECK(cli::run({"discover", "--input", log_csv, "--output", model_json}) == 0);

    const auto model = load_model(model_json);
    CHECK(model.log->num_events() == 200);
    std::uint64_t total = 0;
    for (const A2AEdge& edge : model.a2a.edges) total += edge.count;
    CHECK(total == model.e2e.edges.size());

    // model dumps are byte-stable across a round trip
    const auto model2_json = (dir / "model2.json").string();
    save_model(load_model(model_json), model2_json);
    CHECK(read_file(model_json) == read_file(model2_json));

    const auto dfg_json = (dir / "dfg.json").string();
    CHECK(cli::run({"project", "--model", model_json, "--classes", "class_0,class_1",
                    "--kind", "dfg", "--output", dfg_json}) == 0);
    const auto dfg = nlohmann::json::parse(read_file(dfg_json));
    CHECK(dfg.contains("nodes"));
    CHECK(dfg.contains("edges"));

    const auto case_csv = (dir / "cases.csv").string();
    CHECK(cli::run({"project", "--model", model_json, "--classes", "class_0", "--kind",
                    "log", "--output", case_csv}) == 0);
    CHECK(read_file(case_csv).rfind("case_id,activity,timestamp\n", 0) == 0);

    for (const char* graph : {"mvp", "e2o", "e2e", "dfg"}) {
        const auto dot = (dir / (std::string(graph) + ".dot")).string();
        CHECK(cli::run({"render", "--model", model_json, "--graph", graph, "--output",
                        dot}) == 0);
        CHECK(read_file(dot).rfind("digraph", 0) == 0);
    }
}

TEST_CASE("failures exit nonzero with no partial parse") {
    const auto dir = work_dir();
    CHECK(cli::run({"discover", "--input", (dir / "missing.csv").string(), "--output",
                    (dir / "out.json").string()}) != 0);
    CHECK(cli::run({"nonsense"}) != 0);
    CHECK(cli::run({}) != 0);
    CHECK(cli::run({"project", "--model", (dir / "missing.json").string(), "--classes",
                    "a", "--kind", "dfg", "--output", (dir / "x").string()}) != 0);
}

TEST_CASE("project rejects unknown classes with a helpful message") {
    const auto dir = work_dir();
    const auto log_csv = (dir / "small.csv").string();
    const auto model_json = (dir / "small_model.json").string();
    REQUIRE(cli::run({"generate", "--events", "10", "--classes", "2", "--objects-per-class",
                      "2", "--output", log_csv}) == 0);
    REQUIRE(cli::run({"discover", "--input", log_csv, "--output", model_json}) == 0);
    CHECK(cli::run({"project", "--model", model_json, "--classes", "never_heard_of_it",
                    "--kind", "dfg", "--output", (dir / "never.json").string()}) != 0);
}

TEST_CASE("bench validates its sweep before timing anything") {
    const auto dir = work_dir();
    const auto report = (dir / "bench.json").string();
    fs::remove(report);
    // two points: rejected up front
    CHECK(cli::run({"bench", "--sweep", "events", "--points", "100,200", "--output",
                    report}) != 0);
    CHECK_FALSE(fs::exists(report));

    // a tiny three-point sweep runs and reports ratios
    CHECK(cli::run({"bench", "--sweep", "events", "--points", "100,200,400", "--activities",
                    "5", "--classes", "2", "--objects-per-class", "10", "--output",
                    report}) == 0);
    const auto j = nlohmann::json::parse(read_file(report));
    REQUIRE(j["sweeps"].size() == 1);
    CHECK(j["sweeps"][0]["parameter"] == "events");
    CHECK(j["sweeps"][0]["points"].size() == 3);
    CHECK(j["sweeps"][0]["step_ratios"].size() == 2);
    for (const auto& point : j["sweeps"][0]["points"])
        CHECK(point["seconds"].get<double>() > 0.0);
}
