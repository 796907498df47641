#include "mvp/generator.hpp"

#include <random>

namespace mvp {

namespace {

// first whole second of 2017-07-14 02:40:00 UTC; any fixed base works, whole
// seconds keep generated logs representable in the CSV format
constexpr Millis kBaseTimeMs = 1'500'000'000'000;

// unbiased draw in [0, n); the engine is fully specified by the standard, so
// this mapping keeps streams identical across platforms
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::mt19937_64::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

void check_positive(std::uint64_t value, const char* name) {
    if (value == 0)
        throw ValidationError(std::string(name) + " must be at least 1");
}

} // namespace

DatabaseEventLog generate(const GeneratorParams& params) {
    check_positive(params.n_events, "n_events");
    check_positive(params.n_activities, "n_activities");
    check_positive(params.n_classes, "n_classes");
    check_positive(params.n_objects_per_class, "n_objects_per_class");
    check_positive(params.links_per_event, "links_per_event");

    std::mt19937_64 rng(params.seed);
    LogBuilder builder;

    std::vector<std::string> class_names;
    class_names.reserve(params.n_classes);
    std::vector<std::vector<std::string>> object_names(params.n_classes);
    for (std::uint64_t c = 0; c < params.n_classes; ++c) {
        class_names.push_back("class_" + std::to_string(c));
        builder.add_class(class_names.back());
        auto& objs = object_names[c];
        objs.reserve(params.n_objects_per_class);
        for (std::uint64_t j = 0; j < params.n_objects_per_class; ++j) {
            objs.push_back(class_names.back() + "_o" + std::to_string(j));
            builder.add_object(objs.back(), class_names.back());
        }
    }

    for (std::uint64_t i = 0; i < params.n_events; ++i) {
        std::string id = "event_" + std::to_string(i);
        const std::uint64_t act = bounded(rng, params.n_activities);
        builder.add_event(id, "activity_" + std::to_string(act),
                          kBaseTimeMs + static_cast<Millis>(i) * 1000);
        for (std::uint32_t l = 0; l < params.links_per_event; ++l) {
            const std::uint64_t cls = bounded(rng, params.n_classes);
            const std::uint64_t obj = bounded(rng, params.n_objects_per_class);
            builder.link(id, object_names[cls][obj]);
        }
    }
    return builder.build();
}

} // namespace mvp
