#include "ipset/search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "ipset/parallel.hpp"

namespace ipset {

bool compatible(const Candidate& p, const Candidate& q, std::int64_t d) {
    if (p.point == q.point) return false;
    if (!p.on_line && !q.on_line && p.k != q.k) return false;
    const Characteristic& k = p.on_line ? q.k : p.k;
    const auto dist = integral_distance(p.point, q.point, k);
    return dist.has_value() && *dist <= d;
}

CompatibilityGraph build_compatibility_graph(const CandidatePool& pool,
                                             PositionClass constraint) {
    // O, A and any on-line candidate form a collinear triple, so on-line
    // vertices only participate under the Any constraint.
    const bool with_on_line = constraint == PositionClass::Any;
    CompatibilityGraph graph;
    graph.d = pool.d;
    for (const auto& [k, off_line] : pool.by_characteristic) {
        CompatibilityGraph::Block block;
        block.k = k;
        block.vertices = off_line;
        if (with_on_line) {
            block.vertices.insert(block.vertices.end(), pool.on_line.begin(),
                                  pool.on_line.end());
        }
        const std::size_t m = block.vertices.size();
        block.adjacent.assign(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const bool adj = compatible(block.vertices[i], block.vertices[j], pool.d);
                block.adjacent[i][j] = adj;
                block.adjacent[j][i] = adj;
            }
        }
        graph.blocks.push_back(std::move(block));
    }
    return graph;
}

namespace {

// Incremental position filter: may `pt` join `pts` (which already holds the
// base pair) without creating a collinear triple / concyclic quadruple?
bool extension_allowed(const std::vector<Point>& pts, const Point& pt,
                       PositionClass constraint, const Characteristic& k) {
    if (constraint == PositionClass::Any) return true;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (collinear(pts[i], pts[j], pt)) return false;
        }
    }
    if (constraint == PositionClass::General) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                for (std::size_t l = j + 1; l < n; ++l) {
                    if (concyclic(pts[i], pts[j], pts[l], pt, k)) return false;
                }
            }
        }
    }
    return true;
}

class BlockSearch {
public:
    BlockSearch(const CompatibilityGraph::Block& block, std::int64_t d,
                PositionClass constraint, int min_vertices, int max_vertices,
                bool emit_intermediate)
        : block_(block),
          constraint_(constraint),
          min_vertices_(min_vertices),
          max_vertices_(max_vertices),
          emit_intermediate_(emit_intermediate) {
        base_o_ = Point{Rational(0), Rational(0)};
        base_a_ = Point{Rational(static_cast<long>(d)), Rational(0)};

        // Semi-general and stronger constraints can never use on-line
        // candidates: O, A and any on-line point are a collinear triple.
        std::vector<int> active;
        for (int v = 0; v < static_cast<int>(block_.vertices.size()); ++v) {
            if (constraint_ != PositionClass::Any && block_.vertices[v].on_line) continue;
            active.push_back(v);
        }
        // Decreasing degree keeps the branching factor down near the root.
        std::vector<int> degree(block_.vertices.size(), 0);
        for (int v : active) {
            for (int u : active) {
                if (u != v && block_.adjacent[v][u]) ++degree[v];
            }
        }
        std::stable_sort(active.begin(), active.end(),
                         [&](int lhs, int rhs) { return degree[lhs] > degree[rhs]; });
        order_ = std::move(active);
    }

    /// sink receives a finished set; returns false to stop the whole search.
    void run(const std::function<bool(PointSet)>& sink) {
        sink_ = &sink;
        stop_ = false;
        pts_ = {base_o_, base_a_};
        chosen_.clear();
        std::vector<int> feasible(order_.size());
        for (std::size_t i = 0; i < order_.size(); ++i) feasible[i] = static_cast<int>(i);
        extend(feasible);
        sink_ = nullptr;
    }

private:
    bool emit() {
        // A set living entirely on the base line is not an integral point set.
        bool off_line = false;
        for (int v : chosen_) off_line |= !block_.vertices[v].on_line;
        if (!off_line) return true;

        PointSet s;
        s.k = block_.k;
        s.points = pts_;
        if (!(*sink_)(std::move(s))) {
            stop_ = true;
            return false;
        }
        return true;
    }

    void extend(const std::vector<int>& feasible) {
        const int have = static_cast<int>(chosen_.size());
        if (have >= min_vertices_ && (emit_intermediate_ || have == max_vertices_)) {
            if (!emit()) return;
        }
        if (have == max_vertices_) return;
        if (have + static_cast<int>(feasible.size()) < min_vertices_) return;

        for (std::size_t idx = 0; idx < feasible.size() && !stop_; ++idx) {
            const int pos = feasible[idx];
            const int v = order_[pos];
            const Point& pt = block_.vertices[v].point;
            if (!extension_allowed(pts_, pt, constraint_, block_.k)) continue;

            std::vector<int> next;
            next.reserve(feasible.size() - idx);
            for (std::size_t rest = idx + 1; rest < feasible.size(); ++rest) {
                if (block_.adjacent[v][order_[feasible[rest]]]) {
                    next.push_back(feasible[rest]);
                }
            }
            chosen_.push_back(v);
            pts_.push_back(pt);
            extend(next);
            pts_.pop_back();
            chosen_.pop_back();
        }
    }

    const CompatibilityGraph::Block& block_;
    PositionClass constraint_;
    int min_vertices_;
    int max_vertices_;
    bool emit_intermediate_;
    Point base_o_, base_a_;
    std::vector<int> order_;
    std::vector<Point> pts_;
    std::vector<int> chosen_;
    const std::function<bool(PointSet)>* sink_ = nullptr;
    bool stop_ = false;
};

std::vector<PointSet> collect_canonical(std::vector<std::vector<PointSet>> per_block) {
    std::map<std::string, PointSet> unique;
    for (auto& list : per_block) {
        for (auto& s : list) {
            PointSet canon = canonicalize(s);
            std::string form = canonical_form(canon);
            unique.emplace(std::move(form), std::move(canon));
        }
    }
    std::vector<PointSet> out;
    out.reserve(unique.size());
    for (auto& [form, s] : unique) out.push_back(std::move(s));
    return out;
}

std::vector<PointSet> run_search(const CompatibilityGraph& graph, PositionClass constraint,
                                 int min_vertices, int max_vertices,
                                 bool emit_intermediate, bool all,
                                 const SearchConfig& config) {
    std::vector<std::vector<PointSet>> per_block(graph.blocks.size());

    if (!all) {
        // Deterministic first witness: sequential block order, stop at one.
        for (std::size_t b = 0; b < graph.blocks.size(); ++b) {
            BlockSearch search(graph.blocks[b], graph.d, constraint, min_vertices,
                               max_vertices, emit_intermediate);
            bool found = false;
            search.run([&](PointSet s) {
                per_block[b].push_back(std::move(s));
                found = true;
                return false;
            });
            if (found) break;
        }
        return collect_canonical(std::move(per_block));
    }

    parallel_for(
        graph.blocks.size(),
        [&](std::size_t b) {
            BlockSearch search(graph.blocks[b], graph.d, constraint, min_vertices,
                               max_vertices, emit_intermediate);
            search.run([&](PointSet s) {
                per_block[b].push_back(std::move(s));
                return true;
            });
        },
        config.workers);
    return collect_canonical(std::move(per_block));
}

} // namespace

std::vector<PointSet> find_sets(int n, std::int64_t d, PositionClass constraint, bool all,
                                const SearchConfig& config) {
    if (n < 3) throw InvalidParameter("find_sets: n must be >= 3");
    if (d < 1) throw InvalidParameter("find_sets: d must be >= 1");
    const auto pool = candidate_points(d, config.trial_bound);
    const auto graph = build_compatibility_graph(pool, constraint);
    const int need = n - 2;
    return run_search(graph, constraint, need, need, false, all, config);
}

std::vector<PointSet> find_sets_all_sizes(std::int64_t d, PositionClass constraint,
                                          int n_min, const SearchConfig& config) {
    if (n_min < 3) throw InvalidParameter("find_sets_all_sizes: n_min must be >= 3");
    if (d < 1) throw InvalidParameter("find_sets_all_sizes: d must be >= 1");
    const auto pool = candidate_points(d, config.trial_bound);
    const auto graph = build_compatibility_graph(pool, constraint);
    return run_search(graph, constraint, n_min - 2, std::numeric_limits<int>::max(),
                      true, true, config);
}

std::optional<SearchResult> minimal_diameter(int n, PositionClass constraint,
                                             std::int64_t d_max, bool all_witnesses,
                                             const SearchConfig& config) {
    if (n < 3) throw InvalidParameter("minimal_diameter: n must be >= 3");
    if (d_max < 1) throw InvalidParameter("minimal_diameter: d_max must be >= 1");
    for (std::int64_t d = 1; d <= d_max; ++d) {
        auto witnesses = find_sets(n, d, constraint, all_witnesses, config);
        if (!witnesses.empty()) {
            SearchResult result;
            result.n = n;
            result.constraint = constraint;
            result.d = d;
            result.witnesses = std::move(witnesses);
            result.exhausted_up_to = d - 1;
            return result;
        }
    }
    return std::nullopt;
}

} // namespace ipset
