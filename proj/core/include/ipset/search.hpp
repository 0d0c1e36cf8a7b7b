#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive minimal-diameter search over the candidate pool.
 *
 * Sets of diameter exactly d are cliques in the compatibility graph that
 * contain the base pair O, A. Off-line candidates with different
 * characteristics can never be at integral distance, so the graph decomposes
 * into per-characteristic blocks joined with the shared on-line pool; cliques
 * are enumerated block by block. Witnesses are canonicalized at emission and
 * the final list is sorted, so results are deterministic regardless of
 * worker count.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "ipset/enumeration.hpp"

namespace ipset {

struct CompatibilityGraph {
    /// One per-characteristic block: off-line candidates of a single k merged
    /// with the on-line pool. Cross-block edges are provably absent.
    struct Block {
        Characteristic k;
        std::vector<Candidate> vertices;
        std::vector<std::vector<bool>> adjacent;
    };

    std::int64_t d = 0;
    std::vector<Block> blocks;
};

/// True iff P and Q can coexist in one integral set of diameter d: they share
/// a characteristic (or one is on-line) and |PQ| is an integer in [1, d].
bool compatible(const Candidate& p, const Candidate& q, std::int64_t d);

/// Builds the per-block adjacency structure for a pool. Under SemiGeneral or
/// General the on-line candidates are omitted: together with the base pair
/// they always form a collinear triple.
CompatibilityGraph build_compatibility_graph(const CandidatePool& pool,
                                             PositionClass constraint = PositionClass::Any);

struct SearchResult {
    int n = 0;
    PositionClass constraint = PositionClass::Any;
    std::int64_t d = 0;
    std::vector<PointSet> witnesses;      ///< canonical, sorted, duplicate-free
    std::int64_t exhausted_up_to = 0;     ///< all smaller diameters refuted
};

struct SearchConfig {
    long trial_bound = kDefaultTrialDivisionBound;
    /// 0 = use worker_count() (IPSET_THREADS or hardware concurrency).
    unsigned workers = 0;
};

/// All (or the first, when all = false) canonical n-point sets of diameter
/// exactly d satisfying the position constraint.
std::vector<PointSet> find_sets(int n, std::int64_t d, PositionClass constraint,
                                bool all = true, const SearchConfig& config = {});

/// Every canonical set of diameter exactly d and any cardinality >= n_min
/// satisfying the constraint. Used by whole-pool sweeps.
std::vector<PointSet> find_sets_all_sizes(std::int64_t d, PositionClass constraint,
                                          int n_min = 3,
                                          const SearchConfig& config = {});

/// Iterates d = 1, 2, ... and returns the first diameter with a witness,
/// with exhausted_up_to = d - 1. Empty when the budget d_max is exhausted.
std::optional<SearchResult> minimal_diameter(int n, PositionClass constraint,
                                             std::int64_t d_max,
                                             bool all_witnesses = false,
                                             const SearchConfig& config = {});

} // namespace ipset
