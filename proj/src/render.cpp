#include "mvp/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mvp {

namespace {

constexpr const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

std::string escape_dot(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string quoted(std::string_view text) {
    return '"' + escape_dot(text) + '"';
}

std::string fmt_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", value);
    return buf;
}

} // namespace

std::string class_color(std::size_t class_index, int palette_seed) {
    const int offset = ((palette_seed % 12) + 12) % 12;
    return kPalette[(class_index + static_cast<std::size_t>(offset)) % 12];
}

std::string format_duration(double ms) {
    char buf[64];
    if (ms < 1000.0)
        std::snprintf(buf, sizeof(buf), "%.0fms", ms);
    else if (ms < 60.0 * 1000.0)
        std::snprintf(buf, sizeof(buf), "%.1fs", ms / 1000.0);
    else if (ms < 3600.0 * 1000.0)
        std::snprintf(buf, sizeof(buf), "%.1fmin", ms / 60000.0);
    else if (ms < 86400.0 * 1000.0)
        std::snprintf(buf, sizeof(buf), "%.1fh", ms / 3600000.0);
    else
        std::snprintf(buf, sizeof(buf), "%.1fd", ms / 86400000.0);
    return buf;
}

std::string render_mvp(const MvpModel& model, const RenderOptions& opts) {
    const DatabaseEventLog& log = *model.log;
    const auto kept = filter_edges(model, opts.threshold);

    std::set<std::string> retained;
    for (std::size_t i : kept) {
        retained.insert(model.a2a.edges[i].source);
        retained.insert(model.a2a.edges[i].target);
    }
    for (const auto& [cls, acts] : model.start_activities)
        retained.insert(acts.begin(), acts.end());
    for (const auto& [cls, acts] : model.end_activities)
        retained.insert(acts.begin(), acts.end());
    if (opts.show_isolated)
        retained.insert(model.a2a.nodes.begin(), model.a2a.nodes.end());

    std::ostringstream out;
    out << "digraph mvp {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const std::string& act : model.a2a.nodes)
        if (retained.count(act)) out << "  " << quoted(act) << ";\n";

    for (std::size_t i : kept) {
        const A2AEdge& edge = model.a2a.edges[i];
        const auto cls = log.find_class(edge.cls);
        const std::string color = class_color(cls ? *cls : 0, opts.palette_seed);
        const std::string decoration = opts.decoration == Decoration::frequency
                                           ? std::to_string(edge.count)
                                           : format_duration(edge.perf_ms);
        out << "  " << quoted(edge.source) << " -> " << quoted(edge.target) << " [label=\""
            << escape_dot(edge.cls) << "\\n" << escape_dot(decoration) << "\", color=\""
            << color << "\", fontcolor=\"" << color << "\", class=" << quoted(edge.cls)
            << ", count=\"" << edge.count << "\", dep=\"" << fmt_double(model.dep[i])
            << "\", tooltip=\"perf_ms=" << fmt_double(edge.perf_ms) << "\"];\n";
    }

    // one start and one end marker per class that has any events
    for (const auto& [cls, acts] : model.start_activities) {
        if (acts.empty()) continue;
        const auto cls_idx = log.find_class(cls);
        const std::string color = class_color(cls_idx ? *cls_idx : 0, opts.palette_seed);
        const std::string node = "start@" + cls;
        out << "  " << quoted(node) << " [label=\"start\", shape=circle, style=filled, "
            << "fillcolor=\"" << color << "\"];\n";
        for (const std::string& act : acts)
            out << "  " << quoted(node) << " -> " << quoted(act) << " [color=\"" << color
                << "\"];\n";
    }
    for (const auto& [cls, acts] : model.end_activities) {
        if (acts.empty()) continue;
        const auto cls_idx = log.find_class(cls);
        const std::string color = class_color(cls_idx ? *cls_idx : 0, opts.palette_seed);
        const std::string node = "end@" + cls;
        out << "  " << quoted(node) << " [label=\"end\", shape=doublecircle, style=filled, "
            << "fillcolor=\"" << color << "\"];\n";
        for (const std::string& act : acts)
            out << "  " << quoted(act) << " -> " << quoted(node) << " [color=\"" << color
                << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_e2o(const E2OGraph& e2o) {
    std::ostringstream out;
    out << "digraph e2o {\n  rankdir=LR;\n";
    for (const std::string& ev : e2o.event_nodes)
        out << "  " << quoted("e:" + ev) << " [label=" << quoted(ev)
            << ", shape=box, style=filled, fillcolor=\"#d62728\", fontcolor=white];\n";
    for (const std::string& obj : e2o.object_nodes)
        out << "  " << quoted("o:" + obj) << " [label=" << quoted(obj)
            << ", shape=ellipse, style=filled, fillcolor=white];\n";
    for (const auto& [ev, obj] : e2o.edges)
        out << "  " << quoted("e:" + ev) << " -> " << quoted("o:" + obj) << " [dir=none];\n";
    out << "}\n";
    return out.str();
}

std::string render_e2e(const E2EGraph& e2e,
                       const std::optional<std::vector<std::string>>& event_subset) {
    std::unordered_set<std::string> known(e2e.nodes.begin(), e2e.nodes.end());
    std::unordered_set<std::string> keep;
    if (event_subset) {
        for (const std::string& id : *event_subset) {
            if (!known.count(id)) throw DomainError("unknown event '" + id + "' in subset");
            keep.insert(id);
        }
    }
    const auto included = [&](const std::string& id) {
        return !event_subset || keep.count(id) > 0;
    };

    std::ostringstream out;
    out << "digraph e2e {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const std::string& ev : e2e.nodes)
        if (included(ev)) out << "  " << quoted(ev) << ";\n";
    for (const E2EEdge& edge : e2e.edges)
        if (included(edge.source) && included(edge.target))
            out << "  " << quoted(edge.source) << " -> " << quoted(edge.target)
                << " [label=" << quoted(edge.object) << ", object=" << quoted(edge.object)
                << ", duration_ms=\"" << edge.duration_ms << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string render_dfg(const Dfg& dfg) {
    std::ostringstream out;
    out << "digraph dfg {\n  rankdir=LR;\n  node [shape=box];\n";
    for (const std::string& act : dfg.nodes) out << "  " << quoted(act) << ";\n";
    for (const DfgEdge& edge : dfg.edges)
        out << "  " << quoted(edge.source) << " -> " << quoted(edge.target) << " [label=\""
            << edge.count << "\", count=\"" << edge.count << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace mvp
