#pragma once

#include <optional>

#include "mvp/discovery.hpp"
#include "mvp/projection.hpp"

namespace mvp {

enum class Decoration { frequency, performance };

struct RenderOptions {
    Decoration decoration = Decoration::frequency;
    /// Edges with dependency below this are not drawn.
    double threshold = 0.0;
    /// Also emit activities with no incident edge and no start/end marker.
    bool show_isolated = false;
    /// Rotates the class -> color assignment.
    int palette_seed = 0;
};

/// DOT text for the full model: activities, the A2A edges that pass the
/// dependency threshold (labeled with class plus count or mean duration,
/// colored per class), and start/end markers for every class whose objects
/// have events.
std::string render_mvp(const MvpModel& model, const RenderOptions& opts);

/// DOT text for the bipartite event/object graph.
std::string render_e2o(const E2OGraph& e2o);

/// DOT text for the event-level multigraph, edges labeled with their object.
/// When `event_subset` is given, only those events and the edges between
/// them are drawn; unknown ids raise DomainError.
std::string render_e2e(const E2EGraph& e2e,
                       const std::optional<std::vector<std::string>>& event_subset = {});

/// DOT text for a DFG, edges labeled with their counts.
std::string render_dfg(const Dfg& dfg);

/// Fixed 12-color palette cycled by sorted class index, rotated by the seed.
std::string class_color(std::size_t class_index, int palette_seed);

/// Human-readable duration: ms / s / min / h / d with one decimal.
std::string format_duration(double ms);

} // namespace mvp
