#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace seedcomm {

/// Dense internal node index in [0, n).
using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

using Edge = std::pair<NodeId, NodeId>;

/// Hop distance; kUnreachable marks nodes in another component.
using HopCount = std::uint32_t;
inline constexpr HopCount kUnreachable = std::numeric_limits<HopCount>::max();

/**
 * Immutable undirected simple graph in compressed sparse row form.
 *
 * Each node keeps the external label it was read with; internal indices are assigned
 * densely in first-appearance order and drive every deterministic tie-break downstream.
 * Neighbor lists are sorted ascending.
 */
class Graph {
public:
    Graph() = default;

    /**
     * Builds a graph over @a labels (index i gets labels[i]). Self-loops are discarded and
     * parallel edges merged; the counts of both are reported through the optional out-params.
     * Throws DomainError on duplicate labels or endpoints outside [0, labels.size()).
     */
    static Graph fromEdges(std::vector<std::string> labels, std::span<const Edge> edges,
                           std::size_t *selfLoops = nullptr, std::size_t *duplicates = nullptr);

    /// Labels "0".."n-1".
    static Graph fromEdges(std::size_t n, std::span<const Edge> edges);

    std::size_t numberOfNodes() const noexcept { return labels_.size(); }
    std::size_t numberOfEdges() const noexcept { return numEdges_; }
    bool empty() const noexcept { return labels_.empty(); }

    bool hasNode(NodeId u) const noexcept { return u < labels_.size(); }

    std::span<const NodeId> neighbors(NodeId u) const;
    std::size_t degree(NodeId u) const;
    bool hasEdge(NodeId u, NodeId v) const;

    const std::string &label(NodeId u) const;
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    /// Every edge once as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.labels_ == b.labels_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    void requireNode(NodeId u) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
    std::size_t numEdges_ = 0;
};

/// Single-source BFS result.
struct DistanceRow {
    NodeId source = 0;
    std::vector<HopCount> dist;

    bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
};

/// Exact unweighted shortest-path hop counts from @a source. Throws DomainError for a bad source.
DistanceRow bfsDistances(const Graph &g, NodeId source);

/// m / (n(n-1)/2). Throws DomainError when n < 2.
double graphDensity(const Graph &g);

/// Number of edges with both endpoints in @a members. Duplicate entries are ignored.
std::size_t inducedEdgeCount(const Graph &g, std::span<const NodeId> members);

/// Number of edges with exactly one endpoint in @a members.
std::size_t boundaryEdgeCount(const Graph &g, std::span<const NodeId> members);

/// Validates ids against @a g and returns them sorted and de-duplicated.
NodeSet toNodeSet(const Graph &g, std::span<const NodeId> members);

} // namespace seedcomm
