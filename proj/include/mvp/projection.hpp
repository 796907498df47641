#pragma once

#include "mvp/discovery.hpp"

namespace mvp {

/// A nonempty choice of classes selecting which object perspectives to keep.
class Viewpoint {
public:
    /// Throws DomainError when `classes` is empty. Names are sorted and
    /// de-duplicated; membership in a concrete log is checked by the
    /// projection operations.
    explicit Viewpoint(std::vector<std::string> classes);

    const std::vector<std::string>& classes() const { return classes_; }

private:
    std::vector<std::string> classes_;
};

struct DfgEdge {
    std::string source;
    std::string target;
    std::uint64_t count = 0;

    bool operator==(const DfgEdge&) const = default;
};

/// Classical Directly-Follows Graph: activity nodes and counted edges.
struct Dfg {
    std::vector<std::string> nodes; // sorted; only activities incident to an edge
    std::vector<DfgEdge> edges;     // sorted by (source, target)

    bool operator==(const Dfg&) const = default;
};

/// A set of (possibly overlapping, possibly non-covering) event sets, each
/// of which becomes one case of a classical log.
struct CaseNotion {
    /// Each case lists event ids ascending in the total order; cases are
    /// de-duplicated and deterministically ordered.
    std::vector<std::vector<std::string>> cases;

    bool operator==(const CaseNotion&) const = default;
};

/// Indices into model.e2e.edges of the edges whose object is in scope.
std::vector<std::size_t> viewpoint_edge_indices(const MvpModel& model, const Viewpoint& v);

/// The in-scope E2E edges themselves.
std::vector<E2EEdge> viewpoint_edges(const MvpModel& model, const Viewpoint& v);

/// DFG over the viewpoint's edges: one edge per distinct activity pair,
/// counting the E2E edges that map onto it.
Dfg project_dfg(const MvpModel& model, const Viewpoint& v);

/// For every in-scope object o, one case: the union of the related-event
/// sequences of all in-scope objects whose sequence intersects o's.
/// One hop of intersection, exactly; `transitive_closure` extends the union
/// to whole connected components and is an extension beyond that rule.
CaseNotion derive_case_notion(const MvpModel& model, const Viewpoint& v,
                              bool transitive_closure = false);

/// Classical log whose cases are the derived case notion. Case identifiers
/// are a digest of each case's sorted event-id list, so repeated projection
/// is reproducible.
ClassicalEventLog project_log(const MvpModel& model, const Viewpoint& v,
                              bool transitive_closure = false);

} // namespace mvp
