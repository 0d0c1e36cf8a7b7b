// Command-line front end: exhaustive search, family construction, set
// verification, bound tables and candidate listings, with exact-rational
// set files and an append-only result cache.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipset/bounds.hpp"
#include "ipset/cache.hpp"
#include "ipset/constructions.hpp"
#include "ipset/enumeration.hpp"
#include "ipset/search.hpp"
#include "ipset/serialization.hpp"

namespace fs = std::filesystem;
using namespace ipset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudgetExceeded = 3;

std::string position_slug(PositionClass pc) {
    switch (pc) {
        case PositionClass::Any: return "any";
        case PositionClass::SemiGeneral: return "semi";
        case PositionClass::General: return "general";
    }
    return "any";
}

PositionClass parse_position(const std::string& text) {
    const auto pos = position_from_string(text);
    if (!pos) throw InvalidParameter("unknown position class: " + text);
    return *pos;
}

// ---- search -----------------------------------------------------------------

int cmd_search(int n, const std::string& position, std::int64_t max_diameter,
               bool all_witnesses, const std::string& out_dir,
               const std::string& cache_path) {
    const PositionClass constraint = parse_position(position);
    const auto result = minimal_diameter(n, constraint, max_diameter, all_witnesses);

    CacheRow row;
    row.n = n;
    row.constraint = constraint;

    if (!result) {
        row.exhausted_up_to = max_diameter;
        append_cache_row(cache_path, row);
        std::cout << "no " << to_string(constraint) << " set of " << n
                  << " points found for any diameter <= " << max_diameter << "\n"
                  << "exhausted_up_to = " << max_diameter << "\n";
        return kExitBudgetExceeded;
    }

    fs::create_directories(out_dir);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < result->witnesses.size(); ++i) {
        const PointSet& w = result->witnesses[i];
        SetFileMetadata meta;
        meta.n = w.n();
        meta.diameter = diameter(w);
        meta.position = to_string(classify_position(w));
        meta.provenance = "search";
        std::ostringstream name;
        name << "n" << n << "_" << position_slug(constraint) << "_d" << result->d
             << "_w" << i << ".json";
        const fs::path path = fs::path(out_dir) / name.str();
        write_set_file(path, w, &meta);
        files.push_back(path.string());
    }

    row.minimal_d = result->d;
    row.witness_path = files.empty() ? "-" : files.front();
    row.exhausted_up_to = result->exhausted_up_to;
    append_cache_row(cache_path, row);

    std::cout << "n  constraint    d  witnesses  exhausted_up_to\n"
              << n << "  " << to_string(constraint) << "  " << result->d << "  "
              << result->witnesses.size() << "  " << result->exhausted_up_to << "\n";
    for (const auto& f : files) std::cout << "witness: " << f << "\n";
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct CheckLine {
    std::string name;
    enum class Outcome { Pass, Fail, NotApplicable } outcome;
    std::string detail;
};

void print_check(const CheckLine& line) {
    const char* tag = line.outcome == CheckLine::Outcome::Pass   ? "pass"
                      : line.outcome == CheckLine::Outcome::Fail ? "FAIL"
                                                                 : "not applicable";
    std::cout << line.name << ": " << tag;
    if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
    std::cout << "\n";
}

std::string trace_summary(const ProofTrace& trace) {
    std::ostringstream out;
    out << (trace.branch == ProofBranch::Hyperbola ? "hyperbola" : "strip") << " branch";
    for (const auto& ineq : trace.inequalities) {
        out << "; " << ineq.name << ": " << ineq.lhs.get_str() << " " << ineq.relation
            << " " << ineq.rhs.get_str() << (ineq.pass ? "" : " VIOLATED");
    }
    return out.str();
}

int cmd_verify(const std::string& path, std::vector<std::string> checks) {
    PointSet s;
    SetFileMetadata meta;
    s = read_set_file(path, &meta);

    const std::set<std::string> known = {"container", "hyperbola",  "strips",
                                         "replay",    "cube-root", "distance-one"};
    if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
        checks.assign(known.begin(), known.end());
    }
    for (const auto& c : checks) {
        if (!known.count(c)) throw InvalidParameter("unknown check: " + c);
    }
    const std::set<std::string> wanted(checks.begin(), checks.end());

    std::vector<CheckLine> lines;
    const ValidationReport vr = validate(s);
    {
        CheckLine line{"validate", vr.valid ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail, ""};
        std::ostringstream detail;
        if (vr.valid) {
            detail << s.n() << " points, all pairwise distances integral";
        } else {
            if (!vr.duplicate_points.empty()) detail << vr.duplicate_points.size() << " duplicate point pair(s); ";
            if (!vr.non_integral_pairs.empty()) {
                detail << vr.non_integral_pairs.size() << " non-integral pair(s):";
                for (const auto& [i, j] : vr.non_integral_pairs) detail << " (" << i << "," << j << ")";
                detail << "; ";
            }
            if (vr.all_collinear) detail << "situated on a straight line";
        }
        line.detail = detail.str();
        lines.push_back(line);
    }
    std::cout << "position: " << to_string(vr.position) << "\n";

    const bool semi = vr.position != PositionClass::Any;
    const int n = s.n();

    auto not_applicable = [&](const std::string& name, const std::string& why) {
        lines.push_back({name, CheckLine::Outcome::NotApplicable, why});
    };

    if (vr.valid) {
        const Integer p = diameter(s);
        const Integer mind = min_distance(s);

        if (wanted.count("container")) {
            const bool ok = square_container_check(s);
            lines.push_back({"container", ok ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail,
                             "fits a square of side " + p.get_str()});
        }
        if (wanted.count("hyperbola")) {
            if (n < 4) {
                not_applicable("hyperbola", "n < 4");
            } else if (!semi) {
                not_applicable("hyperbola", "not semi-general");
            } else {
                const auto rep = extremal_distances(s);
                const bool ok = hyperbola_count_check(s);
                std::ostringstream detail;
                detail << "n = " << n << " <= 4*" << rep.closest_distance.get_str() << "*"
                       << rep.second_min.get_str() << " = "
                       << Integer(4 * rep.closest_distance * rep.second_min).get_str();
                lines.push_back({"hyperbola", ok ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail,
                                 detail.str()});
            }
        }
        if (wanted.count("strips")) {
            if (n < 4) {
                not_applicable("strips", "n < 4");
            } else if (!semi) {
                not_applicable("strips", "not semi-general");
            } else {
                const auto rep = extremal_distances(s);
                const Integer m5 = rep.second_min * rep.second_min * rep.second_min *
                                   rep.second_min * rep.second_min;
                if (m5 <= p * p) {
                    not_applicable("strips", "hyperbola branch applies, m^5 <= p^2");
                } else {
                    const auto strip = strip_partition_check(s);
                    int worst = 0;
                    for (const auto& sc : strip.strip_counts) worst = std::max(worst, sc.second);
                    lines.push_back({"strips",
                                     strip.pass ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail,
                                     "q = " + std::to_string(strip.q) + ", max occupancy " +
                                         std::to_string(worst) + " <= 2"});
                }
            }
        }
        if (wanted.count("replay")) {
            if (n < 4) {
                not_applicable("replay", "n < 4");
            } else if (!semi) {
                not_applicable("replay", "not semi-general");
            } else {
                const auto trace = replay_theorem_proof(s);
                lines.push_back({"replay",
                                 trace.pass ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail,
                                 trace_summary(trace)});
            }
        }
        if (wanted.count("cube-root")) {
            if (n < 4) {
                not_applicable("cube-root", "n < 4");
            } else if (!semi) {
                not_applicable("cube-root", "not semi-general");
            } else {
                const bool ok = cube_root_min_distance_holds(s);
                lines.push_back({"cube-root", ok ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail,
                                 "min^3 = " + Integer(mind * mind * mind).get_str() +
                                     " >= n = " + std::to_string(n)});
            }
        }
        if (wanted.count("distance-one")) {
            if (mind != 1) {
                not_applicable("distance-one", "no unit distance");
            } else {
                const auto rep = distance_one_structure_check(s);
                std::string detail = rep.conforming ? "n-1 collinear plus one bisector point"
                                                    : "";
                for (const auto& v : rep.violations) detail += v + "; ";
                lines.push_back({"distance-one",
                                 rep.conforming ? CheckLine::Outcome::Pass : CheckLine::Outcome::Fail,
                                 detail});
            }
        }
    }

    bool any_fail = false;
    for (const auto& line : lines) {
        print_check(line);
        any_fail |= line.outcome == CheckLine::Outcome::Fail;
    }
    return any_fail ? kExitCheckFailed : kExitOk;
}

// ---- construct ----------------------------------------------------------------

int cmd_construct(const std::string& family, std::int64_t height, int n,
                  std::string out_file) {
    PointSet s;
    std::string default_name;
    if (family == "facher") {
        s = facher(Integer(static_cast<long>(height)));
        default_name = "facher_h" + std::to_string(height) + ".json";
    } else {
        s = circular(n);
        default_name = "circular_n" + std::to_string(n) + ".json";
    }
    if (out_file.empty()) out_file = default_name;

    SetFileMetadata meta;
    meta.n = s.n();
    meta.diameter = diameter(s);
    meta.position = to_string(classify_position(s));
    meta.provenance = family;
    write_set_file(out_file, s, &meta);

    std::cout << "family: " << family << "\n"
              << "n: " << s.n() << "\n"
              << "diameter: " << meta.diameter->get_str() << "\n"
              << "position: " << *meta.position << "\n"
              << "file: " << out_file << "\n";
    return kExitOk;
}

// ---- bounds -------------------------------------------------------------------

int cmd_bounds(int n_from, int n_to, const BoundParams& params, const std::string& format) {
    const auto table = bound_table(n_from, n_to, params);
    if (format == "csv") {
        std::cout << "n,theorem,linear,min_dist,remark,upper,collinear\n";
        for (const auto& r : table) {
            std::cout << r.n << ',' << format_decimal(r.theorem_bound) << ','
                      << format_decimal(r.linear_bound) << ',' << format_decimal(r.min_dist_bound)
                      << ',' << format_decimal(r.remark_bound) << ',' << format_decimal(r.upper_bound)
                      << ',' << format_decimal(r.collinear_bound) << '\n';
        }
    } else {
        std::printf("%6s %15s %15s %15s %15s %15s %15s\n", "n", "theorem", "linear",
                    "min_dist", "remark", "upper", "collinear");
        for (const auto& r : table) {
            std::printf("%6d %15.9f %15.9f %15.9f %15.9f %15.9f %15.9f\n", r.n,
                        r.theorem_bound, r.linear_bound, r.min_dist_bound, r.remark_bound,
                        r.upper_bound, r.collinear_bound);
        }
    }
    return kExitOk;
}

// ---- candidates ----------------------------------------------------------------

int cmd_candidates(std::int64_t d, const std::string& format) {
    const auto pool = candidate_points(d);
    if (format == "csv") {
        std::cout << "x,r,k,a,b\n";
        for (const auto& [k, list] : pool.by_characteristic) {
            for (const auto& c : list) {
                std::cout << to_string(c.point.x) << ',' << to_string(c.point.r) << ','
                          << c.k.get_str() << ',' << c.a.get_str() << ',' << c.b.get_str()
                          << '\n';
            }
        }
        for (const auto& c : pool.on_line) {
            std::cout << to_string(c.point.x) << ',' << to_string(c.point.r) << ",1,"
                      << c.a.get_str() << ',' << c.b.get_str() << '\n';
        }
    } else {
        std::cout << "candidate pool for d = " << d << " (" << pool.off_line_count()
                  << " off-line, " << pool.on_line.size() << " on-line)\n";
        for (const auto& [k, list] : pool.by_characteristic) {
            std::cout << "k = " << k.get_str() << ":\n";
            for (const auto& c : list) {
                std::cout << "  (x=" << to_string(c.point.x) << ", r=" << to_string(c.point.r)
                          << ", a=" << c.a.get_str() << ", b=" << c.b.get_str() << ")\n";
            }
        }
        if (!pool.on_line.empty()) {
            std::cout << "on-line:\n";
            for (const auto& c : pool.on_line) {
                std::cout << "  (x=" << to_string(c.point.x) << ", a=" << c.a.get_str()
                          << ", b=" << c.b.get_str() << ")\n";
            }
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for planar integral point sets"};
    app.require_subcommand(1);

    // search
    auto* search_cmd = app.add_subcommand("search", "minimal-diameter exhaustive search");
    int search_n = 3;
    std::string search_position = "any";
    std::int64_t search_max_d = 100;
    bool search_all = false;
    std::string search_out_dir = ".";
    std::string search_cache = "ipset_cache.tsv";
    search_cmd->add_option("--n", search_n, "number of points (>= 3)")->required();
    search_cmd->add_option("--position", search_position, "any | semi | general");
    search_cmd->add_option("--max-diameter", search_max_d, "search budget (default 100)");
    search_cmd->add_flag("--all", search_all, "collect all witnesses at the minimal diameter");
    search_cmd->add_option("--out-dir", search_out_dir, "directory for witness files");
    search_cmd->add_option("--cache", search_cache, "result cache path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run checks against a set file");
    std::string verify_path;
    std::string verify_checks = "all";
    verify_cmd->add_option("file", verify_path, "set file to verify")->required();
    verify_cmd->add_option("--checks", verify_checks,
                           "comma list of container,hyperbola,strips,replay,cube-root,distance-one");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "generate a known family");
    std::string construct_family;
    std::int64_t construct_height = 0;
    int construct_n = 0;
    std::string construct_out;
    construct_cmd->add_option("family", construct_family, "facher | circular")->required();
    construct_cmd->add_option("--height", construct_height, "facher apex height");
    construct_cmd->add_option("--n", construct_n, "circular cardinality");
    construct_cmd->add_option("--out", construct_out, "output file");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "tabulate the bound formulas");
    int bounds_from = 3, bounds_to = 20;
    BoundParams bound_params;
    std::string bounds_format = "text";
    bounds_cmd->add_option("--from", bounds_from, "first n");
    bounds_cmd->add_option("--to", bounds_to, "last n");
    bounds_cmd->add_option("--c2", bound_params.c2, "upper-bound constant");
    bounds_cmd->add_option("--c3", bound_params.c3, "remark-bound constant");
    bounds_cmd->add_option("--delta", bound_params.delta, "collinear-bound delta (> 0)");
    bounds_cmd->add_option("--epsilon", bound_params.epsilon, "collinear-bound epsilon (> 0)");
    bounds_cmd->add_flag("--collinear-log2", bound_params.collinear_log2,
                         "read the collinear exponent denominator as 4*log2(1+eps)");
    bounds_cmd->add_option("--format", bounds_format, "text | csv");

    // candidates
    auto* candidates_cmd = app.add_subcommand("candidates", "list the candidate pool");
    std::int64_t candidates_d = 1;
    std::string candidates_format = "text";
    candidates_cmd->add_option("--d", candidates_d, "target diameter (>= 1)")->required();
    candidates_cmd->add_option("--format", candidates_format, "text | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (search_cmd->parsed()) {
            return cmd_search(search_n, search_position, search_max_d, search_all,
                              search_out_dir, search_cache);
        }
        if (verify_cmd->parsed()) {
            std::vector<std::string> checks;
            std::stringstream in(verify_checks);
            std::string item;
            while (std::getline(in, item, ',')) {
                if (!item.empty()) checks.push_back(item);
            }
            return cmd_verify(verify_path, checks);
        }
        if (construct_cmd->parsed()) {
            if (construct_family != "facher" && construct_family != "circular") {
                throw InvalidParameter("unknown family: " + construct_family);
            }
            if (construct_family == "facher" && construct_height < 1) {
                throw InvalidParameter("facher requires --height >= 1");
            }
            if (construct_family == "circular" && construct_n < 3) {
                throw InvalidParameter("circular requires --n >= 3");
            }
            return cmd_construct(construct_family, construct_height, construct_n,
                                 construct_out);
        }
        if (bounds_cmd->parsed()) {
            if (bounds_format != "text" && bounds_format != "csv") {
                throw InvalidParameter("unknown format: " + bounds_format);
            }
            return cmd_bounds(bounds_from, bounds_to, bound_params, bounds_format);
        }
        if (candidates_cmd->parsed()) {
            if (candidates_format != "text" && candidates_format != "csv") {
                throw InvalidParameter("unknown format: " + candidates_format);
            }
            return cmd_candidates(candidates_d, candidates_format);
        }
    } catch (const ipset::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
