#pragma once

#include "mvp/generator.hpp"

namespace mvp {

enum class SweepKind { events, activities, classes, objects };

struct BenchPoint {
    std::uint64_t value = 0;
    double seconds = 0.0;          // best of three discovery runs
    std::uint64_t e2e_edges = 0;   // model size at this point
    std::uint64_t a2a_edges = 0;
};

struct BenchSweep {
    std::string parameter;
    std::vector<BenchPoint> points;
    /// seconds ratio between consecutive points
    std::vector<double> step_ratios;
    /// geometric mean of the step ratios; for point grids that double at
    /// every step this is the per-doubling growth factor
    double doubling_ratio = 0.0;
};

struct BenchReport {
    std::vector<BenchSweep> sweeps;
};

const char* sweep_name(SweepKind kind);

/// Default point grid per sweep (doubling grids at desk scale).
std::vector<std::uint64_t> bench_default_points(SweepKind kind);

/// Default fixed generator parameters per sweep.
GeneratorParams bench_fixed_params(SweepKind kind);

/// Generates one log per point (the swept parameter substituted into
/// `fixed`), times discover() on it (wall clock, best of three), and
/// reports the growth ratios. Needs at least three points; parameters are
/// validated before any timing.
BenchSweep run_sweep(SweepKind kind, const std::vector<std::uint64_t>& points,
                     const GeneratorParams& fixed);

std::string report_to_json(const BenchReport& report);

} // namespace mvp
