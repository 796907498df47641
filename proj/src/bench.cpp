#include "mvp/bench.hpp"

#include <chrono>
#include <cmath>

#include <json.hpp>

#include "mvp/discovery.hpp"

namespace mvp {

namespace {

constexpr std::uint64_t kMaxEvents = 10'000'000;
constexpr std::uint64_t kMaxObjects = 10'000'000;

GeneratorParams substitute(SweepKind kind, const GeneratorParams& fixed, std::uint64_t value) {
    GeneratorParams p = fixed;
    switch (kind) {
    case SweepKind::events: p.n_events = value; break;
    case SweepKind::activities: p.n_activities = value; break;
    case SweepKind::classes: p.n_classes = value; break;
    case SweepKind::objects: p.n_objects_per_class = value; break;
    }
    return p;
}

} // namespace

const char* sweep_name(SweepKind kind) {
    switch (kind) {
    case SweepKind::events: return "events";
    case SweepKind::activities: return "activities";
    case SweepKind::classes: return "classes";
    case SweepKind::objects: return "objects";
    }
    return "?";
}

std::vector<std::uint64_t> bench_default_points(SweepKind kind) {
    switch (kind) {
    case SweepKind::events: return {25000, 50000, 100000};
    case SweepKind::activities: return {20, 40, 80};
    case SweepKind::classes: return {5, 10, 20};
    case SweepKind::objects: return {500, 1000, 2000};
    }
    return {};
}

GeneratorParams bench_fixed_params(SweepKind kind) {
    GeneratorParams p;
    p.seed = 7;
    p.links_per_event = 2;
    switch (kind) {
    case SweepKind::events:
        p.n_activities = 40;
        p.n_classes = 10;
        p.n_objects_per_class = 1500;
        break;
    case SweepKind::activities:
        p.n_events = 1000;
        p.n_classes = 10;
        p.n_objects_per_class = 100;
        break;
    case SweepKind::classes:
        p.n_events = 2500;
        p.n_activities = 40;
        p.n_objects_per_class = 1500;
        break;
    case SweepKind::objects:
        p.n_events = 2500;
        p.n_activities = 40;
        p.n_classes = 10;
        break;
    }
    return p;
}

BenchSweep run_sweep(SweepKind kind, const std::vector<std::uint64_t>& points,
                     const GeneratorParams& fixed) {
    if (points.size() < 3)
        throw ValidationError("a sweep needs at least 3 points, got " +
                              std::to_string(points.size()));
    for (std::uint64_t value : points) {
        const GeneratorParams p = substitute(kind, fixed, value);
        if (p.n_events == 0 || p.n_activities == 0 || p.n_classes == 0 ||
            p.n_objects_per_class == 0 || p.links_per_event == 0)
            throw ValidationError("sweep point " + std::to_string(value) +
                                  " yields a zero-sized parameter");
        if (p.n_events > kMaxEvents)
            throw ValidationError("sweep point " + std::to_string(value) +
                                  " exceeds the event budget");
        if (p.n_classes > kMaxObjects / p.n_objects_per_class)
            throw ValidationError("sweep point " + std::to_string(value) +
                                  " exceeds the object budget");
    }

    BenchSweep sweep;
    sweep.parameter = sweep_name(kind);
    for (std::uint64_t value : points) {
        const auto log = std::make_shared<const DatabaseEventLog>(
            generate(substitute(kind, fixed, value)));
        BenchPoint point;
        point.value = value;
        for (int run = 0; run < 3; ++run) {
            const auto t0 = std::chrono::steady_clock::now();
            const MvpModel model = discover(log);
            const auto t1 = std::chrono::steady_clock::now();
            const double seconds = std::chrono::duration<double>(t1 - t0).count();
            if (run == 0 || seconds < point.seconds) point.seconds = seconds;
            point.e2e_edges = model.e2e.edges.size();
            point.a2a_edges = model.a2a.edges.size();
        }
        sweep.points.push_back(point);
    }

    double log_sum = 0.0;
    for (std::size_t i = 1; i < sweep.points.size(); ++i) {
        const double ratio = sweep.points[i].seconds / sweep.points[i - 1].seconds;
        sweep.step_ratios.push_back(ratio);
        log_sum += std::log(ratio);
    }
    sweep.doubling_ratio = std::exp(log_sum / static_cast<double>(sweep.step_ratios.size()));
    return sweep;
}

std::string report_to_json(const BenchReport& report) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    nlohmann::ordered_json sweeps = nlohmann::ordered_json::array();
    for (const BenchSweep& sweep : report.sweeps) {
        nlohmann::ordered_json j;
        j["parameter"] = sweep.parameter;
        nlohmann::ordered_json points = nlohmann::ordered_json::array();
        for (const BenchPoint& p : sweep.points)
            points.push_back({{"value", p.value},
                              {"seconds", p.seconds},
                              {"e2e_edges", p.e2e_edges},
                              {"a2a_edges", p.a2a_edges}});
        j["points"] = std::move(points);
        j["step_ratios"] = sweep.step_ratios;
        j["doubling_ratio"] = sweep.doubling_ratio;
        sweeps.push_back(std::move(j));
    }
    out["sweeps"] = std::move(sweeps);
    return out.dump(2) + "\n";
}

} // namespace mvp
