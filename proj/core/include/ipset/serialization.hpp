#pragma once

/**
 * @file serialization.hpp
 * @brief Set files: JSON documents with exact rational coordinates.
 *
 * Grammar (UTF-8 JSON):
 *   { "k": <positive integer>,
 *     "points": [ { "x": "<rational>", "r": "<rational>" }, ... ],
 *     "metadata": { "n": int, "diameter": int, "position": string,
 *                   "provenance": string }   // optional, all fields optional
 *   }
 * Rationals are strings "num" or "num/den" in lowest terms; no floats ever
 * appear in files, so parse(serialize(s)) == s exactly.
 */

#include <filesystem>
#include <optional>
#include <string>

#include "ipset/geometry.hpp"

namespace ipset {

struct SetFileMetadata {
    std::optional<int> n;
    std::optional<Integer> diameter;
    std::optional<std::string> position;
    std::optional<std::string> provenance;
};

std::string serialize_set(const PointSet& s, const SetFileMetadata* metadata = nullptr);

/// Throws ParseError on malformed documents.
PointSet parse_set(const std::string& text, SetFileMetadata* metadata_out = nullptr);

void write_set_file(const std::filesystem::path& path, const PointSet& s,
                    const SetFileMetadata* metadata = nullptr);

/// Throws ParseError on malformed documents or unreadable files.
PointSet read_set_file(const std::filesystem::path& path,
                       SetFileMetadata* metadata_out = nullptr);

} // namespace ipset
