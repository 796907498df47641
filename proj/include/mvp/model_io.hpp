#pragma once

#include <filesystem>

#include "mvp/discovery.hpp"
#include "mvp/projection.hpp"

namespace mvp {

/// Serializes a model to its JSON dump: the log plus `e2o`, `e2e`, `a2a`
/// (count, perf, dep per edge), `start_activities` and `end_activities`.
/// dump -> load -> dump is byte-stable.
std::string model_to_json(const MvpModel& model);

/// Parses a model dump. Graph arrays are taken verbatim; the embedded log is
/// rebuilt and re-validated.
MvpModel model_from_json(std::string_view text);

void save_model(const MvpModel& model, const std::filesystem::path& path);
MvpModel load_model(const std::filesystem::path& path);

/// {"nodes": [...], "edges": [{"source", "target", "count"}, ...]}
std::string dfg_to_json(const Dfg& dfg);

} // namespace mvp
