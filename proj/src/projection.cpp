#include "mvp/projection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mvp {

namespace {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = kHex[value & 0xf];
        value >>= 4;
    }
    return out;
}

// in-scope class indices; throws on names the log does not know
std::vector<bool> scope_mask(const DatabaseEventLog& log, const Viewpoint& v) {
    std::vector<bool> in_scope(log.num_classes(), false);
    for (const std::string& name : v.classes()) {
        auto cls = log.find_class(name);
        if (!cls) {
            std::string known;
            for (std::size_t c = 0; c < log.num_classes(); ++c) {
                if (c > 0) known += ", ";
                known += log.class_name(c);
            }
            throw DomainError("unknown class '" + name + "'; log classes: " +
                              (known.empty() ? "(none)" : known));
        }
        in_scope[*cls] = true;
    }
    return in_scope;
}

// cases as sorted event-rank vectors, de-duplicated
std::set<std::vector<std::uint32_t>> case_rank_sets(const DatabaseEventLog& log,
                                                    const Viewpoint& v,
                                                    bool transitive_closure) {
    const auto in_scope = scope_mask(log, v);

    std::vector<std::uint32_t> seeds; // in-scope objects with at least one event
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj)
        if (in_scope[log.object_class(obj)] && !log.events_of_object(obj).empty())
            seeds.push_back(static_cast<std::uint32_t>(obj));

    // event rank -> in-scope objects referencing it
    std::vector<std::vector<std::uint32_t>> objs_of_event(log.num_events());
    for (std::uint32_t obj : seeds)
        for (std::uint32_t ev : log.events_of_object(obj)) objs_of_event[ev].push_back(obj);

    std::set<std::vector<std::uint32_t>> cases;

    if (!transitive_closure) {
        std::vector<bool> in_union(log.num_objects(), false);
        for (std::uint32_t seed : seeds) {
            std::vector<std::uint32_t> neighbours;
            for (std::uint32_t ev : log.events_of_object(seed)) {
                for (std::uint32_t other : objs_of_event[ev]) {
                    if (!in_union[other]) {
                        in_union[other] = true;
                        neighbours.push_back(other);
                    }
                }
            }
            std::vector<std::uint32_t> events;
            for (std::uint32_t obj : neighbours) {
                in_union[obj] = false;
                const auto ranks = log.events_of_object(obj);
                events.insert(events.end(), ranks.begin(), ranks.end());
            }
            std::sort(events.begin(), events.end());
            events.erase(std::unique(events.begin(), events.end()), events.end());
            cases.insert(std::move(events));
        }
        return cases;
    }

    // closure mode: union-find over objects sharing an event
    std::vector<std::uint32_t> parent(log.num_objects());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<std::uint32_t>(i);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& objs : objs_of_event)
        for (std::size_t i = 1; i < objs.size(); ++i) parent[find(objs[i])] = find(objs[0]);

    std::map<std::uint32_t, std::vector<std::uint32_t>> components;
    for (std::uint32_t seed : seeds) {
        auto& events = components[find(seed)];
        const auto ranks = log.events_of_object(seed);
        events.insert(events.end(), ranks.begin(), ranks.end());
    }
    for (auto& [root, events] : components) {
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end()), events.end());
        cases.insert(std::move(events));
    }
    return cases;
}

} // namespace

Viewpoint::Viewpoint(std::vector<std::string> classes) : classes_(std::move(classes)) {
    if (classes_.empty()) throw DomainError("a viewpoint needs at least one class");
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
}

std::vector<std::size_t> viewpoint_edge_indices(const MvpModel& model, const Viewpoint& v) {
    const DatabaseEventLog& log = *model.log;
    const auto in_scope = scope_mask(log, v);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < model.e2e.edges.size(); ++i) {
        const auto obj = log.find_object(model.e2e.edges[i].object);
        if (obj && in_scope[log.object_class(*obj)]) out.push_back(i);
    }
    return out;
}

std::vector<E2EEdge> viewpoint_edges(const MvpModel& model, const Viewpoint& v) {
    std::vector<E2EEdge> out;
    for (std::size_t i : viewpoint_edge_indices(model, v)) out.push_back(model.e2e.edges[i]);
    return out;
}

Dfg project_dfg(const MvpModel& model, const Viewpoint& v) {
    const DatabaseEventLog& log = *model.log;
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
    for (std::size_t i : viewpoint_edge_indices(model, v)) {
        const E2EEdge& edge = model.e2e.edges[i];
        const auto source = log.find_event(edge.source);
        const auto target = log.find_event(edge.target);
        counts[{log.activity_name(log.event_activity(*source)),
                log.activity_name(log.event_activity(*target))}] += 1;
    }
    Dfg dfg;
    std::set<std::string> nodes;
    for (const auto& [pair, count] : counts) {
        nodes.insert(pair.first);
        nodes.insert(pair.second);
        dfg.edges.push_back(DfgEdge{pair.first, pair.second, count});
    }
    dfg.nodes.assign(nodes.begin(), nodes.end());
    return dfg;
}

CaseNotion derive_case_notion(const MvpModel& model, const Viewpoint& v,
                              bool transitive_closure) {
    const DatabaseEventLog& log = *model.log;
    CaseNotion notion;
    for (const auto& ranks : case_rank_sets(log, v, transitive_closure)) {
        std::vector<std::string> ids;
        ids.reserve(ranks.size());
        for (std::uint32_t ev : ranks) ids.push_back(log.event(ev).id);
        notion.cases.push_back(std::move(ids));
    }
    return notion;
}

ClassicalEventLog project_log(const MvpModel& model, const Viewpoint& v,
                              bool transitive_closure) {
    const DatabaseEventLog& log = *model.log;
    ClassicalEventLog out;
    out.events.reserve(log.num_events());
    for (std::size_t pos = 0; pos < log.num_events(); ++pos) out.events.push_back(log.event(pos));
    out.activities.reserve(log.num_activities());
    for (std::size_t act = 0; act < log.num_activities(); ++act)
        out.activities.push_back(log.activity_name(act));

    for (const auto& ranks : case_rank_sets(log, v, transitive_closure)) {
        // the case id is a digest of the lexicographically sorted member ids,
        // a pure function of the event-id set
        std::vector<std::string> ids;
        ids.reserve(ranks.size());
        for (std::uint32_t ev : ranks) ids.push_back(log.event(ev).id);
        std::sort(ids.begin(), ids.end());
        std::string joined;
        for (const std::string& id : ids) {
            joined += id;
            joined.push_back('\x1f');
        }
        out.cases.emplace_back("case_" + hex64(fnv1a64(joined)),
                               std::vector<std::size_t>(ranks.begin(), ranks.end()));
    }
    std::sort(out.cases.begin(), out.cases.end());
    // distinct cases hashing to the same digest get a deterministic suffix
    std::string prev_base;
    std::size_t dup = 0;
    for (auto& [id, members] : out.cases) {
        if (id == prev_base) {
            id += "_" + std::to_string(++dup);
        } else {
            prev_base = id;
            dup = 0;
        }
    }
    return out;
}

} // namespace mvp
