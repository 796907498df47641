#include "mvp/event_log.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace mvp {

namespace {

// days since 1970-01-01 for a civil date (Howard Hinnant's algorithm)
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yy + (m <= 2));
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(int y, unsigned m) {
    static constexpr std::array<unsigned, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                       31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[m - 1];
}

int digits(std::string_view s, std::size_t pos, std::size_t n) {
    int v = 0;
    for (std::size_t i = pos; i < pos + n; ++i) {
        const char c = s[i];
        if (c < '0' || c > '9')
            throw ParseError("malformed timestamp '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

Millis parse_timestamp(std::string_view text) {
    // strict "YYYY-MM-DD HH:MM:SS"
    if (text.size() != 19 || text[4] != '-' || text[7] != '-' || text[10] != ' ' ||
        text[13] != ':' || text[16] != ':')
        throw ParseError("malformed timestamp '" + std::string(text) + "'");
    const int year = digits(text, 0, 4);
    const int month = digits(text, 5, 2);
    const int day = digits(text, 8, 2);
    const int hour = digits(text, 11, 2);
    const int minute = digits(text, 14, 2);
    const int second = digits(text, 17, 2);
    if (month < 1 || month > 12 || day < 1 ||
        day > static_cast<int>(days_in_month(year, month)) || hour > 23 || minute > 59 ||
        second > 59)
        throw ParseError("malformed timestamp '" + std::string(text) + "'");
    const std::int64_t days = days_from_civil(year, month, day);
    return ((days * 24 + hour) * 60 + minute) * 60000 + second * 1000;
}

std::string format_timestamp(Millis ms) {
    if (ms % 1000 != 0)
        throw IoError("timestamp " + std::to_string(ms) +
                      " ms has sub-second precision, not representable as "
                      "'YYYY-MM-DD HH:MM:SS'");
    std::int64_t secs = ms / 1000;
    std::int64_t days = secs / 86400;
    std::int64_t rem = secs % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u %02d:%02d:%02d", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

std::optional<std::size_t> DatabaseEventLog::find_event(std::string_view id) const {
    auto it = event_index_.find(std::string(id));
    if (it == event_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> DatabaseEventLog::find_object(std::string_view id) const {
    auto it = object_index_.find(std::string(id));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> DatabaseEventLog::find_class(std::string_view name) const {
    auto it = class_index_.find(std::string(name));
    if (it == class_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> DatabaseEventLog::find_activity(std::string_view name) const {
    auto it = activity_index_.find(std::string(name));
    if (it == activity_index_.end()) return std::nullopt;
    return it->second;
}

std::span<const std::uint32_t> DatabaseEventLog::events_of_object(std::size_t obj) const {
    const auto begin = obj_ev_offsets_[obj];
    const auto end = obj_ev_offsets_[obj + 1];
    return {obj_ev_.data() + begin, obj_ev_.data() + end};
}

bool DatabaseEventLog::operator==(const DatabaseEventLog& other) const {
    // canonical fields only; indexes and the CSR adjacency are derived
    return events_ == other.events_ && acts_ == other.acts_ &&
           activities_ == other.activities_ && objects_ == other.objects_ &&
           obj_class_ == other.obj_class_ && classes_ == other.classes_ && eo_ == other.eo_;
}

LogBuilder& LogBuilder::add_class(std::string name) {
    if (class_by_name_.emplace(name, classes_.size()).second)
        classes_.push_back(std::move(name));
    return *this;
}

LogBuilder& LogBuilder::add_object(std::string id, std::string class_name) {
    auto it = object_by_id_.find(id);
    if (it != object_by_id_.end()) {
        if (objects_[it->second].second != class_name)
            throw ConsistencyError("object '" + id + "' declared with classes '" +
                                   objects_[it->second].second + "' and '" + class_name + "'");
        return *this;
    }
    add_class(class_name);
    object_by_id_.emplace(id, objects_.size());
    objects_.emplace_back(std::move(id), std::move(class_name));
    return *this;
}

LogBuilder& LogBuilder::add_event(std::string id, std::string activity, Millis time_ms) {
    if (!event_by_id_.emplace(id, events_.size()).second)
        throw ConsistencyError("duplicate event id '" + id + "'");
    events_.push_back(Event{std::move(id), std::move(activity), time_ms});
    return *this;
}

LogBuilder& LogBuilder::link(std::string event_id, std::string object_id) {
    links_.emplace_back(std::move(event_id), std::move(object_id));
    return *this;
}

DatabaseEventLog LogBuilder::build() {
    DatabaseEventLog log;

    // events by (time, id): realizes the total order with the lexicographic
    // id tie-break
    std::sort(events_.begin(), events_.end(), [](const Event& a, const Event& b) {
        if (a.time_ms != b.time_ms) return a.time_ms < b.time_ms;
        return a.id < b.id;
    });
    log.events_ = std::move(events_);
    log.event_index_.reserve(log.events_.size());
    for (std::size_t i = 0; i < log.events_.size(); ++i)
        log.event_index_.emplace(log.events_[i].id, static_cast<std::uint32_t>(i));

    log.activities_.reserve(log.events_.size());
    for (const Event& e : log.events_) log.activities_.push_back(e.activity);
    std::sort(log.activities_.begin(), log.activities_.end());
    log.activities_.erase(std::unique(log.activities_.begin(), log.activities_.end()),
                          log.activities_.end());
    for (std::size_t i = 0; i < log.activities_.size(); ++i)
        log.activity_index_.emplace(log.activities_[i], static_cast<std::uint32_t>(i));
    log.acts_.reserve(log.events_.size());
    for (const Event& e : log.events_)
        log.acts_.push_back(log.activity_index_.at(e.activity));

    std::sort(classes_.begin(), classes_.end());
    log.classes_ = std::move(classes_);
    for (std::size_t i = 0; i < log.classes_.size(); ++i)
        log.class_index_.emplace(log.classes_[i], static_cast<std::uint32_t>(i));

    std::sort(objects_.begin(), objects_.end());
    log.objects_.reserve(objects_.size());
    log.obj_class_.reserve(objects_.size());
    for (auto& [id, cls] : objects_) {
        log.object_index_.emplace(id, static_cast<std::uint32_t>(log.objects_.size()));
        log.objects_.push_back(std::move(id));
        log.obj_class_.push_back(log.class_index_.at(cls));
    }

    log.eo_.reserve(links_.size());
    for (const auto& [eid, oid] : links_) {
        auto ev = log.find_event(eid);
        if (!ev) throw LookupError("link references unknown event '" + eid + "'");
        auto ob = log.find_object(oid);
        if (!ob) throw LookupError("link references unknown object '" + oid + "'");
        log.eo_.emplace_back(static_cast<std::uint32_t>(*ev), static_cast<std::uint32_t>(*ob));
    }
    std::sort(log.eo_.begin(), log.eo_.end());
    log.eo_.erase(std::unique(log.eo_.begin(), log.eo_.end()), log.eo_.end());

    // CSR adjacency; eo_ is sorted by event rank, so each object's list
    // comes out ascending in the total order
    log.obj_ev_offsets_.assign(log.objects_.size() + 1, 0);
    for (const auto& [ev, ob] : log.eo_) log.obj_ev_offsets_[ob + 1] += 1;
    for (std::size_t i = 1; i < log.obj_ev_offsets_.size(); ++i)
        log.obj_ev_offsets_[i] += log.obj_ev_offsets_[i - 1];
    log.obj_ev_.resize(log.eo_.size());
    {
        std::vector<std::uint32_t> cursor(log.obj_ev_offsets_.begin(),
                                          log.obj_ev_offsets_.end() - 1);
        for (const auto& [ev, ob] : log.eo_) log.obj_ev_[cursor[ob]++] = ev;
    }

    *this = LogBuilder();
    return log;
}

} // namespace mvp
