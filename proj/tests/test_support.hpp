#pragma once

// Test-only helpers: brute-force oracles evaluated straight from the
// definitions, a random log builder, and a small DOT parse-back reader.
// Nothing here reuses the library's discovery or projection code paths.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mvp/event_log.hpp"

namespace mvp::testing {

struct OracleEdge {
    std::string source;
    std::string target;
    std::string object;
    long long duration_ms;

    bool operator==(const OracleEdge&) const = default;
    auto operator<=>(const OracleEdge&) const = default;
};

struct OracleA2AStats {
    std::uint64_t count = 0;
    double perf_ms = 0.0;
    double dep = 0.0;
};

using OracleA2AKey = std::tuple<std::string, std::string, std::string>; // (source, target, class)

// F_E by the book: for every object, scan all ordered pairs of its linked
// events and keep the pairs with no linked event strictly between them.
inline std::vector<OracleEdge> oracle_e2e(const DatabaseEventLog& log) {
    std::vector<OracleEdge> edges;
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj) {
        std::vector<std::size_t> linked;
        for (const auto& [ev, ob] : log.eo())
            if (ob == obj) linked.push_back(ev);
        std::sort(linked.begin(), linked.end());
        for (std::size_t i = 0; i < linked.size(); ++i) {
            for (std::size_t j = i + 1; j < linked.size(); ++j) {
                bool adjacent = true;
                for (std::size_t k = 0; k < linked.size(); ++k)
                    if (linked[k] > linked[i] && linked[k] < linked[j]) adjacent = false;
                if (!adjacent) continue;
                const Event& a = log.event(linked[i]);
                const Event& b = log.event(linked[j]);
                edges.push_back(
                    OracleEdge{a.id, b.id, log.object_id(obj), b.time_ms - a.time_ms});
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// naive grouping of the oracle edges plus the two-branch dependency formula
inline std::map<OracleA2AKey, OracleA2AStats> oracle_a2a(const DatabaseEventLog& log,
                                                         const std::vector<OracleEdge>& edges) {
    std::map<OracleA2AKey, std::vector<long long>> groups;
    for (const OracleEdge& e : edges) {
        const auto source = log.find_event(e.source);
        const auto target = log.find_event(e.target);
        const auto obj = log.find_object(e.object);
        groups[{log.activity_name(log.event_activity(*source)),
                log.activity_name(log.event_activity(*target)),
                log.class_name(log.object_class(*obj))}]
            .push_back(e.duration_ms);
    }
    std::map<OracleA2AKey, OracleA2AStats> out;
    for (const auto& [key, durations] : groups) {
        OracleA2AStats stats;
        stats.count = durations.size();
        long long total = 0;
        for (long long d : durations) total += d;
        stats.perf_ms = static_cast<double>(total) / static_cast<double>(stats.count);
        out[key] = stats;
    }
    for (auto& [key, stats] : out) {
        const auto& [a1, a2, cls] = key;
        const double fwd = static_cast<double>(stats.count);
        const auto rev = out.find({a2, a1, cls});
        if (a1 == a2 || rev == out.end()) {
            stats.dep = fwd / (fwd + 1.0);
        } else {
            const double bwd = static_cast<double>(rev->second.count);
            stats.dep = (fwd - bwd) / (fwd + bwd + 1.0);
        }
    }
    return out;
}

// the one-hop case-notion union, evaluated by the double loop over
// in-scope object pairs
inline std::set<std::set<std::string>> oracle_case_notion(
    const DatabaseEventLog& log, const std::vector<std::string>& classes) {
    std::set<std::string> scope(classes.begin(), classes.end());
    std::vector<std::size_t> in_scope;
    for (std::size_t obj = 0; obj < log.num_objects(); ++obj)
        if (scope.count(log.class_name(log.object_class(obj)))) in_scope.push_back(obj);

    auto events_of = [&](std::size_t obj) {
        std::set<std::size_t> evs;
        for (const auto& [ev, ob] : log.eo())
            if (ob == obj) evs.insert(ev);
        return evs;
    };

    std::set<std::set<std::string>> cases;
    for (std::size_t o : in_scope) {
        const auto mine = events_of(o);
        if (mine.empty()) continue;
        std::set<std::size_t> merged;
        for (std::size_t other : in_scope) {
            const auto theirs = events_of(other);
            bool intersects = false;
            for (std::size_t ev : theirs)
                if (mine.count(ev)) intersects = true;
            if (intersects) merged.insert(theirs.begin(), theirs.end());
        }
        std::set<std::string> ids;
        for (std::size_t ev : merged) ids.insert(log.event(ev).id);
        cases.insert(std::move(ids));
    }
    return cases;
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n; // bias is irrelevant for test data
}

// Random structural logs: timestamp collisions, events without links,
// objects without events, multi-class linking.
inline DatabaseEventLog random_log(std::uint64_t seed, std::size_t max_events = 50,
                                   std::size_t max_classes = 5) {
    std::mt19937_64 rng(seed);
    const std::size_t n_events = draw(rng, max_events + 1);
    const std::size_t n_classes = 1 + draw(rng, max_classes);
    const std::size_t n_objects = draw(rng, n_events + 4);
    const std::size_t n_activities = 1 + draw(rng, 6);

    LogBuilder builder;
    std::vector<std::string> objects;
    for (std::size_t c = 0; c < n_classes; ++c) builder.add_class("c" + std::to_string(c));
    for (std::size_t j = 0; j < n_objects; ++j) {
        objects.push_back("o" + std::to_string(j));
        builder.add_object(objects.back(), "c" + std::to_string(draw(rng, n_classes)));
    }
    for (std::size_t i = 0; i < n_events; ++i) {
        const std::string id = "e" + std::to_string(i);
        // coarse time grid, so equal timestamps are common
        const Millis time = 1'400'000'000'000 + static_cast<Millis>(draw(rng, n_events)) * 1000;
        builder.add_event(id, "a" + std::to_string(draw(rng, n_activities)), time);
        if (!objects.empty()) {
            const std::size_t links = draw(rng, 4);
            for (std::size_t l = 0; l < links; ++l)
                builder.link(id, objects[draw(rng, objects.size())]);
        }
    }
    return builder.build();
}

struct ParsedDotEdge {
    std::string source;
    std::string target;
    std::string cls;
    std::uint64_t count = 0;

    bool operator==(const ParsedDotEdge&) const = default;
    auto operator<=>(const ParsedDotEdge&) const = default;
};

inline std::optional<std::string> dot_quoted_at(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '"') return std::nullopt;
    std::string out;
    for (++pos; pos < text.size(); ++pos) {
        if (text[pos] == '\\' && pos + 1 < text.size()) {
            out.push_back(text[++pos]);
        } else if (text[pos] == '"') {
            ++pos;
            return out;
        } else {
            out.push_back(text[pos]);
        }
    }
    return std::nullopt;
}

inline std::optional<std::string> dot_attr(const std::string& line, const std::string& name) {
    const std::string needle = name + "=\"";
    const auto at = line.find(needle);
    if (at == std::string::npos) return std::nullopt;
    std::size_t pos = at + needle.size();
    std::string out;
    for (; pos < line.size(); ++pos) {
        if (line[pos] == '\\' && pos + 1 < line.size()) {
            out.push_back(line[++pos]);
        } else if (line[pos] == '"') {
            return out;
        } else {
            out.push_back(line[pos]);
        }
    }
    return std::nullopt;
}

// reads back the A2A edges of a rendered MVP graph
inline std::vector<ParsedDotEdge> parse_mvp_edges(const std::string& dot) {
    std::vector<ParsedDotEdge> out;
    std::size_t start = 0;
    while (start < dot.size()) {
        auto end = dot.find('\n', start);
        if (end == std::string::npos) end = dot.size();
        const std::string line = dot.substr(start, end - start);
        start = end + 1;
        const auto cls = dot_attr(line, "class");
        const auto count = dot_attr(line, "count");
        if (!cls || !count) continue;
        std::size_t pos = line.find('"');
        if (pos == std::string::npos) continue;
        const auto source = dot_quoted_at(line, pos);
        pos = line.find('"', line.find("->", pos));
        if (pos == std::string::npos) continue;
        const auto target = dot_quoted_at(line, pos);
        if (!source || !target) continue;
        out.push_back(ParsedDotEdge{*source, *target, *cls, std::stoull(*count)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mvp::testing
