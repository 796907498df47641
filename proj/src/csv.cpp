#include "mvp/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace mvp {

namespace {

constexpr const char* kReserved[3] = {"event_id", "event_activity", "event_timestamp"};

bool blank_cell(const std::string& cell) {
    return cell.empty() || cell == "NaN";
}

// splits one line; supports RFC-4180 style quoting without embedded newlines
std::vector<std::string> split_row(const std::string& line, std::size_t row_no) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted)
        throw FormatError("row " + std::to_string(row_no) + ": unterminated quote");
    cells.push_back(std::move(cur));
    return cells;
}

std::string quote_cell(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

DatabaseEventLog load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");

    std::string line;
    if (!std::getline(in, line))
        throw FormatError("'" + path.string() + "': empty file, header row required");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_row(line, 1);
    std::size_t id_col = header.size(), act_col = header.size(), ts_col = header.size();
    std::vector<std::pair<std::size_t, std::string>> class_cols; // (column, class name)
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string& name = header[i];
        if (name == kReserved[0]) {
            if (id_col != header.size()) throw FormatError("duplicate column 'event_id'");
            id_col = i;
        } else if (name == kReserved[1]) {
            if (act_col != header.size()) throw FormatError("duplicate column 'event_activity'");
            act_col = i;
        } else if (name == kReserved[2]) {
            if (ts_col != header.size()) throw FormatError("duplicate column 'event_timestamp'");
            ts_col = i;
        } else {
            for (const auto& [col, cls] : class_cols)
                if (cls == name) throw FormatError("duplicate class column '" + name + "'");
            class_cols.emplace_back(i, name);
        }
    }
    if (id_col == header.size())
        throw FormatError("'" + path.string() + "': missing column 'event_id'");
    if (act_col == header.size())
        throw FormatError("'" + path.string() + "': missing column 'event_activity'");
    if (ts_col == header.size())
        throw FormatError("'" + path.string() + "': missing column 'event_timestamp'");

    LogBuilder builder;
    for (const auto& [col, cls] : class_cols) builder.add_class(cls);

    struct Seen {
        std::string activity;
        Millis time_ms;
        std::size_t row_no;
    };
    std::unordered_map<std::string, Seen> seen;

    std::size_t row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_row(line, row_no);
        if (cells.size() != header.size())
            throw FormatError("row " + std::to_string(row_no) + ": expected " +
                              std::to_string(header.size()) + " cells, got " +
                              std::to_string(cells.size()));

        const std::string& id = cells[id_col];
        const std::string& act = cells[act_col];
        const std::string& ts = cells[ts_col];
        if (id.empty())
            throw FormatError("row " + std::to_string(row_no) + ": blank event_id");
        if (act.empty())
            throw FormatError("row " + std::to_string(row_no) + ": blank event_activity");
        Millis time_ms;
        try {
            time_ms = parse_timestamp(ts);
        } catch (const ParseError& e) {
            throw ParseError("row " + std::to_string(row_no) + ": " + e.what());
        }

        auto it = seen.find(id);
        if (it == seen.end()) {
            seen.emplace(id, Seen{act, time_ms, row_no});
            builder.add_event(id, act, time_ms);
        } else if (it->second.activity != act || it->second.time_ms != time_ms) {
            throw ConsistencyError("rows " + std::to_string(it->second.row_no) + " and " +
                                   std::to_string(row_no) + ": event '" + id +
                                   "' has conflicting activity or timestamp");
        }

        std::size_t filled = 0;
        for (const auto& [col, cls] : class_cols) {
            if (blank_cell(cells[col])) continue;
            ++filled;
            if (filled > 1)
                throw FormatError("row " + std::to_string(row_no) +
                                  ": more than one non-blank class cell");
            const std::string& obj = cells[col];
            builder.add_object(obj, cls);
            builder.link(id, obj); // duplicates collapse in build()
        }
    }
    return builder.build();
}

void export_csv(const DatabaseEventLog& log, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");

    std::ostringstream text;
    text << kReserved[0] << ',' << kReserved[1] << ',' << kReserved[2];
    for (std::size_t c = 0; c < log.num_classes(); ++c)
        text << ',' << quote_cell(log.class_name(c));
    text << '\n';

    const auto& eo = log.eo(); // sorted by (event rank, object index)
    std::size_t next = 0;
    for (std::size_t pos = 0; pos < log.num_events(); ++pos) {
        const Event& e = log.event(pos);
        const std::string prefix = quote_cell(e.id) + ',' + quote_cell(e.activity) + ',' +
                                   format_timestamp(e.time_ms);
        bool linked = false;
        while (next < eo.size() && eo[next].first == pos) {
            linked = true;
            const std::size_t obj = eo[next].second;
            const std::size_t cls = log.object_class(obj);
            text << prefix;
            for (std::size_t c = 0; c < log.num_classes(); ++c)
                text << ',' << (c == cls ? quote_cell(log.object_id(obj)) : "");
            text << '\n';
            ++next;
        }
        if (!linked) {
            text << prefix;
            for (std::size_t c = 0; c < log.num_classes(); ++c) text << ',';
            text << '\n';
        }
    }
    out << text.str();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void export_classical_csv(const ClassicalEventLog& log, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");

    out << "case_id,activity,timestamp\n";
    for (const auto& [case_id, members] : log.cases) {
        for (std::size_t pos : members) {
            const Event& e = log.events[pos];
            out << quote_cell(case_id) << ',' << quote_cell(e.activity) << ','
                << format_timestamp(e.time_ms) << '\n';
        }
    }
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

} // namespace mvp
