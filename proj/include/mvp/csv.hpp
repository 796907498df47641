#pragma once

#include <filesystem>

#include "mvp/event_log.hpp"

namespace mvp {

/// Reads the columnar database-log format: header
/// `event_id,event_activity,event_timestamp,<class>...`, one row per
/// (event, object) link. Rows sharing an event id are merged into one event;
/// blank or literal `NaN` class cells mean "no link".
DatabaseEventLog load_csv(const std::filesystem::path& path);

/// Writes the same layout: one row per (event, object) pair ordered by the
/// total order then object id, plus a single all-blank row for events with
/// no links. load_csv(export_csv(L)) == L for logs where every object is
/// linked to at least one event (an unlinked object produces no row).
void export_csv(const DatabaseEventLog& log, const std::filesystem::path& path);

/// Writes `case_id,activity,timestamp`, one row per (case, event)
/// membership; shared events repeat per containing case.
void export_classical_csv(const ClassicalEventLog& log, const std::filesystem::path& path);

} // namespace mvp
