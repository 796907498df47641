#include "mvp/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mvp {

namespace {

using json = nlohmann::ordered_json;

json log_to_json(const DatabaseEventLog& log) {
    json out = json::object();
    json events = json::array();
    for (std::size_t pos = 0; pos < log.num_events(); ++pos) {
        const Event& e = log.event(pos);
        events.push_back({{"id", e.id}, {"activity", e.activity}, {"time", e.time_ms}});
    }
    out["events"] = std::move(events);
    json objects = json::array();
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj)
        objects.push_back(
            {{"id", log.object_id(obj)}, {"class", log.class_name(log.object_class(obj))}});
    out["objects"] = std::move(objects);
    json classes = json::array();
    for (std::size_t cls = 0; cls < log.num_classes(); ++cls)
        classes.push_back(log.class_name(cls));
    out["classes"] = std::move(classes);
    json activities = json::array();
    for (std::size_t act = 0; act < log.num_activities(); ++act)
        activities.push_back(log.activity_name(act));
    out["activities"] = std::move(activities);
    json eo = json::array();
    for (const auto& [ev, obj] : log.eo())
        eo.push_back(json::array({log.event(ev).id, log.object_id(obj)}));
    out["eo"] = std::move(eo);
    return out;
}

DatabaseEventLog log_from_json(const json& j) {
    LogBuilder builder;
    for (const auto& cls : j.at("classes")) builder.add_class(cls.get<std::string>());
    for (const auto& obj : j.at("objects"))
        builder.add_object(obj.at("id").get<std::string>(), obj.at("class").get<std::string>());
    for (const auto& ev : j.at("events"))
        builder.add_event(ev.at("id").get<std::string>(), ev.at("activity").get<std::string>(),
                          ev.at("time").get<Millis>());
    for (const auto& pair : j.at("eo"))
        builder.link(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    return builder.build();
}

json sets_to_json(const ActivitySets& sets) {
    json out = json::object();
    for (const auto& [cls, acts] : sets) out[cls] = json(acts);
    return out;
}

ActivitySets sets_from_json(const json& j) {
    ActivitySets out;
    for (const auto& [cls, acts] : j.items()) {
        auto& set = out[cls];
        for (const auto& act : acts) set.insert(act.get<std::string>());
    }
    return out;
}

} // namespace

std::string model_to_json(const MvpModel& model) {
    json out = json::object();
    out["log"] = log_to_json(*model.log);

    json e2o = json::array();
    for (const auto& [ev, obj] : model.e2o.edges) e2o.push_back(json::array({ev, obj}));
    out["e2o"] = std::move(e2o);

    json e2e = json::array();
    for (const E2EEdge& edge : model.e2e.edges)
        e2e.push_back({{"source", edge.source},
                       {"target", edge.target},
                       {"object", edge.object},
                       {"duration", edge.duration_ms}});
    out["e2e"] = std::move(e2e);

    json a2a = json::array();
    for (std::size_t i = 0; i < model.a2a.edges.size(); ++i) {
        const A2AEdge& edge = model.a2a.edges[i];
        a2a.push_back({{"source", edge.source},
                       {"target", edge.target},
                       {"class", edge.cls},
                       {"count", edge.count},
                       {"perf", edge.perf_ms},
                       {"dep", model.dep[i]}});
    }
    out["a2a"] = std::move(a2a);

    out["start_activities"] = sets_to_json(model.start_activities);
    out["end_activities"] = sets_to_json(model.end_activities);
    return out.dump(2) + "\n";
}

MvpModel model_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model dump: ") + e.what());
    }
    try {
        MvpModel model;
        model.log = std::make_shared<const DatabaseEventLog>(log_from_json(j.at("log")));

        for (const auto& pair : j.at("e2o"))
            model.e2o.edges.emplace_back(pair.at(0).get<std::string>(),
                                         pair.at(1).get<std::string>());
        const DatabaseEventLog& log = *model.log;
        model.e2o.event_nodes.reserve(log.num_events());
        for (std::size_t pos = 0; pos < log.num_events(); ++pos)
            model.e2o.event_nodes.push_back(log.event(pos).id);
        for (std::size_t obj = 0; obj < log.num_objects(); ++obj)
            model.e2o.object_nodes.push_back(log.object_id(obj));
        model.e2e.nodes = model.e2o.event_nodes;

        for (const auto& edge : j.at("e2e"))
            model.e2e.edges.push_back(E2EEdge{edge.at("source").get<std::string>(),
                                              edge.at("target").get<std::string>(),
                                              edge.at("object").get<std::string>(),
                                              edge.at("duration").get<Millis>()});

        model.a2a.nodes.reserve(log.num_activities());
        for (std::size_t act = 0; act < log.num_activities(); ++act)
            model.a2a.nodes.push_back(log.activity_name(act));
        for (const auto& edge : j.at("a2a")) {
            model.a2a.edges.push_back(A2AEdge{edge.at("source").get<std::string>(),
                                              edge.at("target").get<std::string>(),
                                              edge.at("class").get<std::string>(),
                                              edge.at("count").get<std::uint64_t>(),
                                              edge.at("perf").get<double>()});
            model.dep.push_back(edge.at("dep").get<double>());
            const A2AEdge& added = model.a2a.edges.back();
            model.a2a.edge_index.emplace(
                added.source + '\x1f' + added.target + '\x1f' + added.cls,
                static_cast<std::uint32_t>(model.a2a.edges.size() - 1));
        }

        model.start_activities = sets_from_json(j.at("start_activities"));
        model.end_activities = sets_from_json(j.at("end_activities"));
        return model;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model dump: ") + e.what());
    }
}

void save_model(const MvpModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << model_to_json(model);
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

MvpModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream text;
    text << in.rdbuf();
    return model_from_json(text.str());
}

std::string dfg_to_json(const Dfg& dfg) {
    json out = json::object();
    out["nodes"] = json(dfg.nodes);
    json edges = json::array();
    for (const DfgEdge& edge : dfg.edges)
        edges.push_back(
            {{"source", edge.source}, {"target", edge.target}, {"count", edge.count}});
    out["edges"] = std::move(edges);
    return out.dump(2) + "\n";
}

} // namespace mvp
