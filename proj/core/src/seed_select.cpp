#include <seedcomm/seed_select.hpp>

#include <algorithm>
#include <string>

#include <seedcomm/error.hpp>

namespace seedcomm {

std::size_t threshold(std::size_t n, std::size_t delta) {
    if (n == 0)
        throw DomainError("threshold needs a non-empty graph");
    if (delta < 1 || delta > n)
        throw DomainError("delta must lie in [1, " + std::to_string(n) + "], got " +
                          std::to_string(delta));
    const std::size_t q = n / delta;
    const std::size_t r = n % delta;
    // compare r/delta against 1/2 without leaving the integers
    if (2 * r > delta || (2 * r == delta && q % 2 == 1))
        return q + 1;
    return q;
}

NodeSet topTau(const Ranking &r, std::size_t tau) {
    if (tau < 1 || tau > r.size())
        throw DomainError("tau must lie in [1, " + std::to_string(r.size()) + "], got " +
                          std::to_string(tau));
    NodeSet out(r.nodes.begin(), r.nodes.begin() + static_cast<std::ptrdiff_t>(tau));
    std::ranges::sort(out);
    return out;
}

SeedRankings computeSeedRankings(const Graph &g, const IterativeSolveConfig &solver,
                                 SortOrder clusteringOrder) {
    if (g.numberOfEdges() == 0)
        throw DomainError("seed selection needs a graph with at least one edge");
    SeedRankings out{{degreeCentrality(g), localClustering(g), eigenvectorCentrality(g, solver),
                      pageRankCentrality(g, solver)},
                     {}};
    for (std::size_t i = 0; i < kSeedMeasures.size(); ++i) {
        const auto order =
            kSeedMeasures[i] == Measure::LocalClustering ? clusteringOrder : SortOrder::Descending;
        out.rankings[i] = rankNodes(out.scores[i], order);
    }
    return out;
}

SeedSet selectSeeds(const SeedRankings &rankings, std::size_t delta) {
    const std::size_t n = rankings.numberOfNodes();
    SeedSet s;
    s.delta = delta;
    s.tau = threshold(n, delta);

    std::vector<unsigned char> hits(n, 0);
    for (std::size_t i = 0; i < kSeedMeasures.size(); ++i) {
        s.prefixes[i] = topTau(rankings.rankings[i], s.tau);
        for (NodeId u : s.prefixes[i])
            ++hits[u];
    }
    const auto &byDegree = rankings.rankings[0].nodes;
    for (std::size_t k = 0; k < s.tau; ++k)
        if (hits[byDegree[k]] == kSeedMeasures.size())
            s.seeds.push_back(byDegree[k]);
    return s;
}

SeedSet selectSeeds(const Graph &g, const SeedSelectionConfig &cfg) {
    threshold(g.numberOfNodes(), cfg.delta);
    return selectSeeds(computeSeedRankings(g, cfg.solver, cfg.clusteringOrder), cfg.delta);
}

std::array<std::size_t, 4> seedRanks(const SeedRankings &rankings, NodeId u) {
    std::array<std::size_t, 4> ranks{};
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const auto &nodes = rankings.rankings[i].nodes;
        const auto it = std::ranges::find(nodes, u);
        if (it == nodes.end())
            throw DomainError("node " + std::to_string(u) + " not ranked");
        ranks[i] = static_cast<std::size_t>(it - nodes.begin()) + 1;
    }
    return ranks;
}

std::vector<SeedSet> sweepDelta(const SeedRankings &rankings, std::span<const std::size_t> deltas) {
    std::vector<SeedSet> rows;
    rows.reserve(deltas.size());
    for (std::size_t d : deltas)
        rows.push_back(selectSeeds(rankings, d));
    return rows;
}

std::vector<SeedSet> sweepDelta(const Graph &g, std::span<const std::size_t> deltas,
                                const IterativeSolveConfig &solver, SortOrder clusteringOrder) {
    for (std::size_t d : deltas)
        threshold(g.numberOfNodes(), d);
    return sweepDelta(computeSeedRankings(g, solver, clusteringOrder), deltas);
}

} // namespace seedcomm
