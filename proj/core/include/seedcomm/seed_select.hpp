#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <seedcomm/centrality.hpp>
#include <seedcomm/graph.hpp>

namespace seedcomm {

/// The four measures intersected by 4-S, in the order they are stored everywhere below.
inline constexpr std::array<Measure, 4> kSeedMeasures{Measure::Degree, Measure::LocalClustering,
                                                      Measure::Eigenvector, Measure::PageRank};

struct SeedSelectionConfig {
    /// Split variable; tau = round(n / delta). Must satisfy 1 <= delta <= n.
    std::size_t delta = 1;
    IterativeSolveConfig solver{};
    /// Direction the clustering coefficient is ranked in. Degree, eigenvector and PageRank
    /// always rank descending. Ascending puts hubs with sparse neighbourhoods first.
    SortOrder clusteringOrder = SortOrder::Ascending;
};

/**
 * tau = n / delta rounded half-to-even, computed in exact integer arithmetic.
 * Throws DomainError unless n >= 1 and 1 <= delta <= n.
 */
std::size_t threshold(std::size_t n, std::size_t delta);

/// The first @a tau nodes of @a r as a sorted set. Throws DomainError unless 1 <= tau <= |r|.
NodeSet topTau(const Ranking &r, std::size_t tau);

/// The four scores and rankings 4-S needs; compute once, select for many deltas.
struct SeedRankings {
    std::array<CentralityScores, 4> scores;
    std::array<Ranking, 4> rankings;

    std::size_t numberOfNodes() const noexcept { return rankings[0].size(); }
};

/// Throws DomainError on a graph without edges; propagates ConvergenceError.
SeedRankings computeSeedRankings(const Graph &g, const IterativeSolveConfig &solver = {},
                                 SortOrder clusteringOrder = SortOrder::Ascending);

struct SeedSet {
    /// Seeds in degree-ranking order.
    std::vector<NodeId> seeds;
    std::size_t delta = 0;
    std::size_t tau = 0;
    /// Top-tau prefixes, indexed like kSeedMeasures.
    std::array<NodeSet, 4> prefixes;

    bool empty() const noexcept { return seeds.empty(); }
    std::size_t size() const noexcept { return seeds.size(); }
};

/// Intersects the top-tau prefixes. An empty result is returned as-is, not thrown.
SeedSet selectSeeds(const SeedRankings &rankings, std::size_t delta);

/// Computes the rankings and selects in one go.
SeedSet selectSeeds(const Graph &g, const SeedSelectionConfig &cfg);

/// 1-based rank of @a u in each of the four rankings (for reports).
std::array<std::size_t, 4> seedRanks(const SeedRankings &rankings, NodeId u);

/// One row per delta, all sharing a single centrality computation.
std::vector<SeedSet> sweepDelta(const SeedRankings &rankings, std::span<const std::size_t> deltas);
std::vector<SeedSet> sweepDelta(const Graph &g, std::span<const std::size_t> deltas,
                                const IterativeSolveConfig &solver = {},
                                SortOrder clusteringOrder = SortOrder::Ascending);

} // namespace seedcomm
