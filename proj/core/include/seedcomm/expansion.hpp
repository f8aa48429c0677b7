#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <seedcomm/graph.hpp>
#include <seedcomm/seed_select.hpp>

namespace seedcomm {

/// A community grown around one seed. members is sorted and contains the seed.
struct Community {
    NodeId seed = 0;
    NodeSet members;
};

/// Overlapping cover: one community per seed, in seed order.
struct Cover {
    std::vector<Community> communities;
    HopCount radius = 1;
    /// Nodes outside every seed ball right after expansion.
    NodeSet unmappedBeforeAssignment;
    /// Nodes no seed can reach. Always empty on connected graphs.
    NodeSet residual;
};

enum class UnmappedStrategy {
    /// Join every community whose seed is at minimum hop distance.
    ClosestSeed,
    /// Adopt the communities of the highest-degree already-mapped neighbour, in synchronous
    /// sweeps until nothing changes.
    MaxDegreeNeighbor,
};

struct ExpansionConfig {
    UnmappedStrategy unmappedStrategy = UnmappedStrategy::ClosestSeed;
};

/// Symmetric k x k hop-distance matrix between seeds (kUnreachable across components).
class SeedDistanceMatrix {
public:
    SeedDistanceMatrix() = default;
    SeedDistanceMatrix(std::vector<NodeId> seeds, std::vector<HopCount> dist)
        : seeds_(std::move(seeds)), dist_(std::move(dist)) {}

    std::size_t size() const noexcept { return seeds_.size(); }
    std::span<const NodeId> seeds() const noexcept { return seeds_; }
    HopCount at(std::size_t i, std::size_t j) const { return dist_[i * seeds_.size() + j]; }

private:
    std::vector<NodeId> seeds_;
    std::vector<HopCount> dist_;
};

/// Throws DomainError on an empty seed list or a seed outside the graph.
SeedDistanceMatrix seedDistanceMatrix(const Graph &g, std::span<const NodeId> seeds);

/// Minimum finite off-diagonal entry; 1 when there is no such entry (single seed or all
/// seeds in separate components).
HopCount expansionRadius(const SeedDistanceMatrix &matrix);

/// Community per seed = BFS ball of the given radius. Throws DomainError if radius < 1.
Cover expandSeeds(const Graph &g, std::span<const NodeId> seeds, HopCount radius);

/// Attaches Cover::unmappedBeforeAssignment using @a cfg's strategy; nodes no seed can reach
/// end up in Cover::residual.
Cover assignUnmapped(const Graph &g, Cover cover, const ExpansionConfig &cfg = {});

struct Detection {
    SeedSet seeds;
    Cover cover;
};

/// Full pipeline: select, measure seed distances, expand, assign.
/// Throws EmptySeedSetError when the intersection is empty.
Detection detectCommunities(const Graph &g, const SeedSelectionConfig &selection,
                            const ExpansionConfig &expansion = {});

/// Same, reusing precomputed rankings.
Detection detectCommunities(const Graph &g, const SeedRankings &rankings, std::size_t delta,
                            const ExpansionConfig &expansion = {});

/// Expansion half of the pipeline for an explicit seed list.
Cover growCommunities(const Graph &g, std::span<const NodeId> seeds,
                      const ExpansionConfig &expansion = {});

} // namespace seedcomm
