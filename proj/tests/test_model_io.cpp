#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "mvp/csv.hpp"
#include "mvp/generator.hpp"
#include "mvp/model_io.hpp"
#include "test_support.hpp"

using namespace mvp;

namespace {

MvpModel fig7_model() {
    return discover(load_csv(std::filesystem::path(TEST_DATA_DIR) / "erp_fragment.csv"));
}

} // namespace

TEST_CASE("model dumps re-load byte-stably") {
    for (const MvpModel& model :
         {fig7_model(), discover(testing::random_log(3)), discover(DatabaseEventLog{})}) {
        const std::string dump = model_to_json(model);
        const MvpModel reloaded = model_from_json(dump);
        CHECK(model_to_json(reloaded) == dump);
    }
}

TEST_CASE("reloaded models preserve the log and every graph") {
    const auto model = fig7_model();
    const auto reloaded = model_from_json(model_to_json(model));
    CHECK(*reloaded.log == *model.log);
    CHECK(reloaded.e2o == model.e2o);
    CHECK(reloaded.e2e == model.e2e);
    CHECK(reloaded.a2a.nodes == model.a2a.nodes);
    CHECK(reloaded.a2a.edges == model.a2a.edges);
    CHECK(reloaded.dep == model.dep);
    CHECK(reloaded.start_activities == model.start_activities);
    CHECK(reloaded.end_activities == model.end_activities);
}

TEST_CASE("the dump exposes the documented field names") {
    const auto j = nlohmann::json::parse(model_to_json(fig7_model()));
    for (const char* field :
         {"log", "e2o", "e2e", "a2a", "start_activities", "end_activities"})
        CHECK(j.contains(field));
    REQUIRE(!j["a2a"].empty());
    for (const char* field : {"source", "target", "class", "count", "perf", "dep"})
        CHECK(j["a2a"][0].contains(field));
    CHECK(j["start_activities"]["supplier_order"] ==
          nlohmann::json::array({"create_order"}));
    CHECK(j["end_activities"]["supplier_order"] ==
          nlohmann::json::array({"receive_total_order"}));
}

TEST_CASE("broken dumps raise parse errors") {
    CHECK_THROWS_AS(model_from_json("not json at all"), ParseError);
    CHECK_THROWS_AS(model_from_json("{}"), ParseError);
    CHECK_THROWS_AS(model_from_json(R"({"log": {"events": []}})"), ParseError);
}

TEST_CASE("dfg json lists nodes and counted edges") {
    Dfg dfg;
    dfg.nodes = {"A", "B"};
    dfg.edges = {{"A", "B", 2}};
    const auto j = nlohmann::json::parse(dfg_to_json(dfg));
    CHECK(j["nodes"] == nlohmann::json::array({"A", "B"}));
    REQUIRE(j["edges"].size() == 1);
    CHECK(j["edges"][0]["source"] == "A");
    CHECK(j["edges"][0]["target"] == "B");
    CHECK(j["edges"][0]["count"] == 2);
}

TEST_CASE("save and load round-trip through the filesystem") {
    const auto path = std::filesystem::temp_directory_path() / "mvp_model_io_test.json";
    GeneratorParams params;
    params.n_events = 60;
    params.n_classes = 2;
    params.n_objects_per_class = 6;
    const auto model = discover(generate(params));
    save_model(model, path);
    const auto reloaded = load_model(path);
    CHECK(*reloaded.log == *model.log);
    CHECK(model_to_json(reloaded) == model_to_json(model));
    CHECK_THROWS_AS(load_model(path.parent_path() / "missing_model.json"), IoError);
}
