#pragma once

#include "mvp/event_log.hpp"

namespace mvp {

/// Size knobs for synthetic database event logs. All counts must be >= 1.
struct GeneratorParams {
    std::uint64_t n_events = 1000;
    std::uint64_t n_activities = 10;
    std::uint64_t n_classes = 2;
    std::uint64_t n_objects_per_class = 10;
    std::uint64_t seed = 42;
    std::uint32_t links_per_event = 2;
};

/// Deterministic synthetic log: n_events events 1 s apart, activities drawn
/// uniformly, each event linked to links_per_event objects drawn uniformly
/// (class first, then object). Identical params give identical logs.
DatabaseEventLog generate(const GeneratorParams& params);

} // namespace mvp
