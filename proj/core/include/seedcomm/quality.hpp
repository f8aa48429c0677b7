#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <seedcomm/expansion.hpp>
#include <seedcomm/graph.hpp>

namespace seedcomm {

/// Density of the subgraph induced by @a members: m_c / (n_c (n_c - 1) / 2); 0 when n_c < 2.
double intraDensity(const Graph &g, std::span<const NodeId> members);

/// Boundary edges over the n_c (n - n_c) possible ones; 0 when n_c is 0 or n.
double interDensity(const Graph &g, std::span<const NodeId> members);

struct CommunityDensity {
    std::size_t index = 0;
    NodeId seed = 0;
    std::size_t size = 0;
    std::size_t internalEdges = 0;
    std::size_t boundaryEdges = 0;
    double intra = 0.0;
    double inter = 0.0;
    /// intra > rho > inter
    bool passes = false;
};

struct DensityReport {
    double rho = 0.0;
    std::vector<CommunityDensity> communities;
    bool allPass = false;
};

/// Per-community densities against the graph density. Throws DomainError when n < 2.
DensityReport evaluateCover(const Graph &g, const Cover &cover);

} // namespace seedcomm
