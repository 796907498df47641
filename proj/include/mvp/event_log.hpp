#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mvp/errors.hpp"

namespace mvp {

/// Timestamps and durations are epoch/plain milliseconds.
using Millis = std::int64_t;

/// Parses "YYYY-MM-DD HH:MM:SS" (UTC) into epoch milliseconds.
Millis parse_timestamp(std::string_view text);

/// Inverse of parse_timestamp. The wall-clock format has second resolution,
/// so sub-second values are rejected with IoError.
std::string format_timestamp(Millis ms);

struct Event {
    std::string id;
    std::string activity;
    Millis time_ms = 0;

    bool operator==(const Event&) const = default;
};

/// An event log extracted from a database: events related to objects in a
/// many-to-many fashion, with no case notion. Immutable once built; all
/// read accessors are safe to call concurrently.
///
/// Canonical form: events sorted by (time, id) — position in the event
/// vector realizes the total order — and objects, classes and activities
/// sorted by name, so structural equality is plain field comparison.
class DatabaseEventLog {
public:
    DatabaseEventLog() = default;

    std::size_t num_events() const { return events_.size(); }
    std::size_t num_objects() const { return objects_.size(); }
    std::size_t num_classes() const { return classes_.size(); }
    std::size_t num_activities() const { return activities_.size(); }

    /// Event at the given rank of the total order.
    const Event& event(std::size_t pos) const { return events_[pos]; }
    const std::string& object_id(std::size_t obj) const { return objects_[obj]; }
    const std::string& class_name(std::size_t cls) const { return classes_[cls]; }
    const std::string& activity_name(std::size_t act) const { return activities_[act]; }

    /// Index into activities for the event at `pos`.
    std::size_t event_activity(std::size_t pos) const { return acts_[pos]; }
    /// Index into classes for the object `obj`.
    std::size_t object_class(std::size_t obj) const { return obj_class_[obj]; }

    std::optional<std::size_t> find_event(std::string_view id) const;
    std::optional<std::size_t> find_object(std::string_view id) const;
    std::optional<std::size_t> find_class(std::string_view name) const;
    std::optional<std::size_t> find_activity(std::string_view name) const;

    /// The EO relation as (event rank, object index) pairs, sorted and
    /// de-duplicated.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& eo() const { return eo_; }

    /// Ranks of the events related to `obj`, ascending in the total order.
    std::span<const std::uint32_t> events_of_object(std::size_t obj) const;

    bool operator==(const DatabaseEventLog& other) const;

private:
    friend class LogBuilder;

    std::vector<Event> events_;
    std::vector<std::uint32_t> acts_;
    std::vector<std::string> activities_;
    std::vector<std::string> objects_;
    std::vector<std::uint32_t> obj_class_;
    std::vector<std::string> classes_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> eo_;

    // CSR layout of events_of_object
    std::vector<std::uint32_t> obj_ev_offsets_;
    std::vector<std::uint32_t> obj_ev_;

    std::unordered_map<std::string, std::uint32_t> event_index_;
    std::unordered_map<std::string, std::uint32_t> object_index_;
    std::unordered_map<std::string, std::uint32_t> class_index_;
    std::unordered_map<std::string, std::uint32_t> activity_index_;
};

/// Accumulates raw entries in any order, then build() sorts, interns and
/// validates everything into an immutable DatabaseEventLog.
class LogBuilder {
public:
    /// Registers a class, possibly with no objects.
    LogBuilder& add_class(std::string name);

    /// Registers an object. Re-adding with the same class is a no-op;
    /// a different class raises ConsistencyError.
    LogBuilder& add_object(std::string id, std::string class_name);

    /// Registers an event. Duplicate ids raise ConsistencyError.
    LogBuilder& add_event(std::string id, std::string activity, Millis time_ms);

    /// Relates an event to an object. Ids are resolved in build(), so links
    /// may be added before their endpoints. Duplicates collapse.
    LogBuilder& link(std::string event_id, std::string object_id);

    DatabaseEventLog build();

private:
    std::vector<Event> events_;
    std::unordered_map<std::string, std::size_t> event_by_id_;
    std::vector<std::pair<std::string, std::string>> objects_; // (id, class)
    std::unordered_map<std::string, std::size_t> object_by_id_;
    std::vector<std::string> classes_;
    std::unordered_map<std::string, std::size_t> class_by_name_;
    std::vector<std::pair<std::string, std::string>> links_; // (event id, object id)
};

/// A conventional event log: cases mapped onto sets of events. Cases may
/// share events and need not cover all of them.
struct ClassicalEventLog {
    /// All events, in total order.
    std::vector<Event> events;
    /// Sorted activity names.
    std::vector<std::string> activities;
    /// (case id, ascending event ranks), sorted by case id; every entry nonempty.
    std::vector<std::pair<std::string, std::vector<std::size_t>>> cases;

    bool operator==(const ClassicalEventLog&) const = default;
};

} // namespace mvp
