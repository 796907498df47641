#include "mvp/discovery.hpp"

#include <algorithm>

namespace mvp {

namespace {

std::string edge_key(std::string_view source, std::string_view target, std::string_view cls) {
    std::string key;
    key.reserve(source.size() + target.size() + cls.size() + 2);
    key.append(source);
    key.push_back('\x1f');
    key.append(target);
    key.push_back('\x1f');
    key.append(cls);
    return key;
}

} // namespace

const A2AEdge* A2AGraph::find_edge(std::string_view source, std::string_view target,
                                   std::string_view cls) const {
    const std::size_t pos = edge_pos(source, target, cls);
    return pos == edges.size() ? nullptr : &edges[pos];
}

std::size_t A2AGraph::edge_pos(std::string_view source, std::string_view target,
                               std::string_view cls) const {
    auto it = edge_index.find(edge_key(source, target, cls));
    return it == edge_index.end() ? edges.size() : it->second;
}

std::vector<std::string> related_events(const DatabaseEventLog& log,
                                        std::string_view object_id) {
    auto obj = log.find_object(object_id);
    if (!obj) throw LookupError("unknown object '" + std::string(object_id) + "'");
    std::vector<std::string> out;
    const auto ranks = log.events_of_object(*obj);
    out.reserve(ranks.size());
    for (std::uint32_t pos : ranks) out.push_back(log.event(pos).id);
    return out;
}

E2OGraph build_e2o(const DatabaseEventLog& log) {
    E2OGraph g;
    g.event_nodes.reserve(log.num_events());
    for (std::size_t pos = 0; pos < log.num_events(); ++pos)
        g.event_nodes.push_back(log.event(pos).id);
    g.object_nodes.reserve(log.num_objects());
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj)
        g.object_nodes.push_back(log.object_id(obj));
    g.edges.reserve(log.eo().size());
    for (const auto& [ev, obj] : log.eo())
        g.edges.emplace_back(log.event(ev).id, log.object_id(obj));
    return g;
}

E2EGraph build_e2e(const DatabaseEventLog& log) {
    E2EGraph g;
    g.nodes.reserve(log.num_events());
    for (std::size_t pos = 0; pos < log.num_events(); ++pos)
        g.nodes.push_back(log.event(pos).id);
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj) {
        const auto ranks = log.events_of_object(obj);
        for (std::size_t i = 1; i < ranks.size(); ++i) {
            const Event& a = log.event(ranks[i - 1]);
            const Event& b = log.event(ranks[i]);
            g.edges.push_back(E2EEdge{a.id, b.id, log.object_id(obj), b.time_ms - a.time_ms});
        }
    }
    return g;
}

A2AGraph build_a2a(const E2EGraph& e2e, const DatabaseEventLog& log) {
    A2AGraph g;
    g.nodes.reserve(log.num_activities());
    for (std::size_t act = 0; act < log.num_activities(); ++act)
        g.nodes.push_back(log.activity_name(act));

    // group the E2E edges by (source activity, target activity, class)
    std::unordered_map<std::string, std::vector<std::uint32_t>> grouped;
    grouped.reserve(e2e.edges.size());
    for (std::size_t i = 0; i < e2e.edges.size(); ++i) {
        const E2EEdge& edge = e2e.edges[i];
        const auto source = log.find_event(edge.source);
        const auto target = log.find_event(edge.target);
        const auto obj = log.find_object(edge.object);
        if (!source || !target || !obj)
            throw LookupError("E2E edge references entities missing from the log");
        const std::string key =
            edge_key(log.activity_name(log.event_activity(*source)),
                     log.activity_name(log.event_activity(*target)),
                     log.class_name(log.object_class(*obj)));
        grouped[key].push_back(static_cast<std::uint32_t>(i));
    }

    // walk the full class x activity x activity domain so edges come out in
    // canonical order, independent of hash iteration
    for (std::size_t cls = 0; cls < log.num_classes(); ++cls) {
        const std::string& cls_name = log.class_name(cls);
        for (std::size_t a1 = 0; a1 < log.num_activities(); ++a1) {
            const std::string& source = log.activity_name(a1);
            for (std::size_t a2 = 0; a2 < log.num_activities(); ++a2) {
                auto it = grouped.find(edge_key(source, log.activity_name(a2), cls_name));
                if (it == grouped.end()) continue;
                std::int64_t total = 0;
                for (std::uint32_t e : it->second) total += e2e.edges[e].duration_ms;
                const auto count = static_cast<std::uint64_t>(it->second.size());
                g.edge_index.emplace(it->first, static_cast<std::uint32_t>(g.edges.size()));
                g.edges.push_back(A2AEdge{source, log.activity_name(a2), cls_name, count,
                                          static_cast<double>(total) / static_cast<double>(count)});
                g.groups.push_back(std::move(it->second));
            }
        }
    }
    return g;
}

std::pair<ActivitySets, ActivitySets> start_end_activities(const DatabaseEventLog& log) {
    ActivitySets start, end;
    for (std::size_t cls = 0; cls < log.num_classes(); ++cls) {
        start[log.class_name(cls)];
        end[log.class_name(cls)];
    }
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj) {
        const auto ranks = log.events_of_object(obj);
        if (ranks.empty()) continue;
        const std::string& cls = log.class_name(log.object_class(obj));
        start[cls].insert(log.activity_name(log.event_activity(ranks.front())));
        end[cls].insert(log.activity_name(log.event_activity(ranks.back())));
    }
    return {std::move(start), std::move(end)};
}

std::vector<double> dependency(const A2AGraph& a2a) {
    std::vector<double> dep;
    dep.reserve(a2a.edges.size());
    for (const A2AEdge& edge : a2a.edges) {
        const auto fwd = static_cast<double>(edge.count);
        const A2AEdge* rev = edge.source == edge.target
                                 ? nullptr
                                 : a2a.find_edge(edge.target, edge.source, edge.cls);
        if (rev == nullptr) {
            dep.push_back(fwd / (fwd + 1.0));
        } else {
            const auto bwd = static_cast<double>(rev->count);
            dep.push_back((fwd - bwd) / (fwd + bwd + 1.0));
        }
    }
    return dep;
}

MvpModel discover(std::shared_ptr<const DatabaseEventLog> log) {
    MvpModel model;
    model.log = std::move(log);
    model.e2o = build_e2o(*model.log);
    model.e2e = build_e2e(*model.log);
    model.a2a = build_a2a(model.e2e, *model.log);
    std::tie(model.start_activities, model.end_activities) = start_end_activities(*model.log);
    model.dep = dependency(model.a2a);
    return model;
}

MvpModel discover(DatabaseEventLog log) {
    return discover(std::make_shared<const DatabaseEventLog>(std::move(log)));
}

std::vector<std::size_t> filter_edges(const MvpModel& model, double threshold) {
    if (!(threshold >= -1.0 && threshold <= 1.0))
        throw DomainError("dependency threshold " + std::to_string(threshold) +
                          " outside [-1, 1]");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < model.dep.size(); ++i)
        if (model.dep[i] >= threshold) kept.push_back(i);
    return kept;
}

} // namespace mvp
