#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <seedcomm/graph.hpp>

namespace seedcomm {

enum class Measure {
    Degree,
    InDegree,
    OutDegree,
    Closeness,
    Betweenness,
    Eigenvector,
    PageRank,
    LocalClustering,
};

std::string_view toString(Measure m);

/// One score per node for a single measure.
struct CentralityScores {
    Measure measure = Measure::Degree;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](NodeId u) const { return values[u]; }
};

/// Power-iteration settings for eigenvector centrality and PageRank.
struct IterativeSolveConfig {
    /// Stop once the L1 distance between successive iterates drops below this.
    double tolerance = 1e-10;
    std::size_t maxIterations = 1000;
    /// PageRank damping factor alpha.
    double damping = 0.85;

    /// Throws DomainError unless tolerance > 0, maxIterations >= 1 and 0 < damping < 1.
    void validate() const;
};

enum class SortOrder { Descending, Ascending };

/// Nodes ordered by score; equal scores are always ordered by ascending index.
struct Ranking {
    Measure measure = Measure::Degree;
    SortOrder order = SortOrder::Descending;
    std::vector<NodeId> nodes;

    std::size_t size() const noexcept { return nodes.size(); }
};

Ranking rankNodes(const CentralityScores &scores, SortOrder order = SortOrder::Descending);

/// Undirected degree.
CentralityScores degreeCentrality(const Graph &g);

/// In-degree over an arc list on nodes [0, n): number of arcs whose head is i.
CentralityScores inDegreeCentrality(std::size_t n, std::span<const Edge> arcs);
/// Out-degree over an arc list on nodes [0, n): number of arcs whose tail is i.
CentralityScores outDegreeCentrality(std::size_t n, std::span<const Edge> arcs);

/**
 * Closeness restricted to the node's connected component:
 * C_i = |component(i)| / sum_j d(i, j) over reachable j. Isolated nodes score 0.
 * On connected graphs this is exactly n / sum_j d(i, j).
 */
CentralityScores closenessCentrality(const Graph &g);

/**
 * Unnormalized betweenness over unordered pairs {s, t} with s != i != t (Brandes' algorithm).
 * Disconnected pairs contribute nothing.
 */
CentralityScores betweennessCentrality(const Graph &g);

/**
 * Principal eigenvector of the adjacency matrix, L2-normalized with non-negative entries.
 *
 * Iterates on A + I, which has the same eigenvectors as A but a strictly dominant top
 * eigenvalue on connected graphs, bipartite ones included. Starts from the uniform vector.
 * Throws DomainError on a graph without edges and ConvergenceError past maxIterations.
 */
CentralityScores eigenvectorCentrality(const Graph &g, const IterativeSolveConfig &cfg = {});

/**
 * PageRank with each undirected edge treated as a symmetric pair of links, so L(j) = deg(j).
 * Mass at degree-0 nodes is spread uniformly. Scores sum to one.
 * Throws ConvergenceError past maxIterations.
 */
CentralityScores pageRankCentrality(const Graph &g, const IterativeSolveConfig &cfg = {});

/// 2 * |edges among N(i)| / (k_i (k_i - 1)); 0 when k_i < 2.
CentralityScores localClustering(const Graph &g);

} // namespace seedcomm
