#include "ipset/cache.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ipset/errors.hpp"

namespace ipset {

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) fields.push_back(field);
    return fields;
}

} // namespace

std::string cache_header() {
    return "n\tconstraint\tminimal_d\twitness\texhausted_up_to\ttimestamp";
}

std::string format_cache_row(const CacheRow& row) {
    std::string out = std::to_string(row.n);
    out += '\t';
    out += to_string(row.constraint);
    out += '\t';
    out += row.minimal_d ? std::to_string(*row.minimal_d) : std::string("-");
    out += '\t';
    out += row.witness_path.empty() ? std::string("-") : row.witness_path;
    out += '\t';
    out += std::to_string(row.exhausted_up_to);
    out += '\t';
    out += row.timestamp.empty() ? utc_timestamp() : row.timestamp;
    return out;
}

void append_cache_row(const std::filesystem::path& path, const CacheRow& row) {
    const bool fresh = !std::filesystem::exists(path) ||
                       std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw Error("cannot open cache for append: " + path.string());
    if (fresh) out << cache_header() << '\n';
    out << format_cache_row(row) << '\n';
}

std::vector<CacheRow> read_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open cache: " + path.string());
    std::vector<CacheRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == cache_header()) continue;
        }
        const auto fields = split_tabs(line);
        if (fields.size() != 6) throw ParseError("malformed cache row: " + line);
        CacheRow row;
        try {
            row.n = std::stoi(fields[0]);
            const auto pos = position_from_string(fields[1]);
            if (!pos) throw ParseError("bad constraint: " + fields[1]);
            row.constraint = *pos;
            if (fields[2] != "-") row.minimal_d = std::stoll(fields[2]);
            row.witness_path = fields[3];
            row.exhausted_up_to = std::stoll(fields[4]);
            row.timestamp = fields[5];
        } catch (const std::logic_error&) {
            throw ParseError("malformed cache row: " + line);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ipset
