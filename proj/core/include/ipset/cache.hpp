#pragma once

/// Append-only result cache: one tab-separated row per finished search.
/// Plain text so runs diff cleanly; a cached row is never rewritten.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ipset/geometry.hpp"

namespace ipset {

struct CacheRow {
    int n = 0;
    PositionClass constraint = PositionClass::Any;
    std::optional<std::int64_t> minimal_d; ///< empty when the budget ran out
    std::string witness_path;              ///< "-" when no witness was written
    std::int64_t exhausted_up_to = 0;
    std::string timestamp;                 ///< ISO-8601 UTC
};

std::string cache_header();
std::string format_cache_row(const CacheRow& row);

/// Appends one row, creating the file (with header) on first use.
void append_cache_row(const std::filesystem::path& path, const CacheRow& row);

/// Reads all rows; throws ParseError on a malformed table.
std::vector<CacheRow> read_cache(const std::filesystem::path& path);

} // namespace ipset
