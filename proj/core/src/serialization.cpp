#include "ipset/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ipset/numtheory.hpp"

namespace ipset {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j, const char* field) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw ParseError(std::string("field '") + field + "' must be a rational string");
}

} // namespace

std::string serialize_set(const PointSet& s, const SetFileMetadata* metadata) {
    json j;
    if (!s.k.fits_slong_p()) {
        throw Error("serialize_set: characteristic too large for the file format");
    }
    j["k"] = s.k.get_si();
    j["points"] = json::array();
    for (const Point& p : s.points) {
        j["points"].push_back({{"x", rational_to_json(p.x)}, {"r", rational_to_json(p.r)}});
    }
    if (metadata) {
        json m = json::object();
        if (metadata->n) m["n"] = *metadata->n;
        if (metadata->diameter) m["diameter"] = metadata->diameter->get_si();
        if (metadata->position) m["position"] = *metadata->position;
        if (metadata->provenance) m["provenance"] = *metadata->provenance;
        if (!m.empty()) j["metadata"] = m;
    }
    return j.dump(2) + "\n";
}

PointSet parse_set(const std::string& text, SetFileMetadata* metadata_out) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("set file must be a JSON object");
    if (!j.contains("k") || !j["k"].is_number_integer()) {
        throw ParseError("set file needs an integer field 'k'");
    }
    PointSet s;
    s.k = Integer(static_cast<long>(j["k"].get<std::int64_t>()));
    if (s.k < 1) throw ParseError("characteristic k must be positive");
    if (!is_squarefree(s.k)) throw ParseError("characteristic k must be squarefree");

    if (!j.contains("points") || !j["points"].is_array()) {
        throw ParseError("set file needs an array field 'points'");
    }
    for (const auto& pj : j["points"]) {
        if (!pj.is_object() || !pj.contains("x") || !pj.contains("r")) {
            throw ParseError("every point needs fields 'x' and 'r'");
        }
        s.points.push_back({rational_from_json(pj["x"], "x"), rational_from_json(pj["r"], "r")});
    }

    if (metadata_out && j.contains("metadata") && j["metadata"].is_object()) {
        const auto& m = j["metadata"];
        if (m.contains("n") && m["n"].is_number_integer()) metadata_out->n = m["n"].get<int>();
        if (m.contains("diameter") && m["diameter"].is_number_integer()) {
            metadata_out->diameter = Integer(static_cast<long>(m["diameter"].get<std::int64_t>()));
        }
        if (m.contains("position") && m["position"].is_string()) {
            metadata_out->position = m["position"].get<std::string>();
        }
        if (m.contains("provenance") && m["provenance"].is_string()) {
            metadata_out->provenance = m["provenance"].get<std::string>();
        }
    }
    return s;
}

void write_set_file(const std::filesystem::path& path, const PointSet& s,
                    const SetFileMetadata* metadata) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path.string());
    out << serialize_set(s, metadata);
}

PointSet read_set_file(const std::filesystem::path& path, SetFileMetadata* metadata_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_set(buffer.str(), metadata_out);
}

} // namespace ipset
