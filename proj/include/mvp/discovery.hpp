#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mvp/event_log.hpp"

namespace mvp {

/// Bipartite graph relating events to the objects they reference.
/// Edges are the log's EO relation verbatim.
struct E2OGraph {
    std::vector<std::string> event_nodes;  // in total order
    std::vector<std::string> object_nodes; // sorted by id
    std::vector<std::pair<std::string, std::string>> edges;

    bool operator==(const E2OGraph&) const = default;
};

struct E2EEdge {
    std::string source;
    std::string target;
    std::string object;
    Millis duration_ms = 0;

    bool operator==(const E2EEdge&) const = default;
};

/// Directly-follows edges between events, one per adjacent pair in some
/// object's related-event sequence, weighted by elapsed time.
struct E2EGraph {
    std::vector<std::string> nodes; // all event ids, in total order
    std::vector<E2EEdge> edges;     // grouped by object (id order), then position

    bool operator==(const E2EGraph&) const = default;
};

struct A2AEdge {
    std::string source;
    std::string target;
    std::string cls;
    std::uint64_t count = 0;
    double perf_ms = 0.0; // mean duration of the underlying E2E edges
};

inline bool operator==(const A2AEdge& a, const A2AEdge& b) {
    return a.source == b.source && a.target == b.target && a.cls == b.cls &&
           a.count == b.count && a.perf_ms == b.perf_ms;
}

/// Activity-level aggregation of the E2E multigraph, keyed by
/// (source activity, target activity, object class).
struct A2AGraph {
    std::vector<std::string> nodes; // all activities, sorted
    std::vector<A2AEdge> edges;     // canonical (class, source, target) order
    /// Edge index -> indices of its E2E edges (the grouping that produced it).
    std::vector<std::vector<std::uint32_t>> groups;

    const A2AEdge* find_edge(std::string_view source, std::string_view target,
                             std::string_view cls) const;
    std::size_t edge_pos(std::string_view source, std::string_view target,
                         std::string_view cls) const; // edges.size() when absent

    bool operator==(const A2AGraph& other) const {
        return nodes == other.nodes && edges == other.edges && groups == other.groups;
    }

    // populated by build_a2a; lookup key is source+US+target+US+class
    std::unordered_map<std::string, std::uint32_t> edge_index;
};

using ActivitySets = std::map<std::string, std::set<std::string>>;

/// The discovered model: the log plus every derived graph and annotation.
struct MvpModel {
    std::shared_ptr<const DatabaseEventLog> log;
    E2OGraph e2o;
    E2EGraph e2e;
    A2AGraph a2a;
    ActivitySets start_activities; // per class; empty set when no object has events
    ActivitySets end_activities;
    std::vector<double> dep; // parallel to a2a.edges, values in (-1, 1)
};

/// Events related to `object_id`, ascending in the total order.
std::vector<std::string> related_events(const DatabaseEventLog& log,
                                        std::string_view object_id);

E2OGraph build_e2o(const DatabaseEventLog& log);

E2EGraph build_e2e(const DatabaseEventLog& log);

/// Groups E2E edges by (source activity, target activity, object class) and
/// aggregates counts and mean durations. `e2e` must have been built from `log`.
A2AGraph build_a2a(const E2EGraph& e2e, const DatabaseEventLog& log);

/// First and last activity of every object's sequence, collected per class.
std::pair<ActivitySets, ActivitySets> start_end_activities(const DatabaseEventLog& log);

/// Signed dependency per A2A edge: count/(count+1) for self-loops and
/// one-directional edges, otherwise (fwd - rev)/(fwd + rev + 1).
std::vector<double> dependency(const A2AGraph& a2a);

MvpModel discover(std::shared_ptr<const DatabaseEventLog> log);
MvpModel discover(DatabaseEventLog log);

/// Indices of the A2A edges whose dependency is >= threshold.
std::vector<std::size_t> filter_edges(const MvpModel& model, double threshold);

} // namespace mvp
