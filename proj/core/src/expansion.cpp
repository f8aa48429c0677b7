#include <seedcomm/expansion.hpp>

#include <algorithm>
#include <optional>
#include <string>

#include <seedcomm/error.hpp>

namespace seedcomm {

namespace {

void requireSeeds(const Graph &g, std::span<const NodeId> seeds) {
    if (seeds.empty())
        throw DomainError("seed list is empty");
    for (NodeId s : seeds)
        if (!g.hasNode(s))
            throw DomainError("seed " + std::to_string(s) + " not in graph");
}

NodeSet ball(const Graph &g, NodeId source, HopCount radius) {
    std::vector<HopCount> dist(g.numberOfNodes(), kUnreachable);
    NodeSet members{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < members.size(); ++head) {
        const NodeId u = members[head];
        if (dist[u] == radius)
            continue;
        for (NodeId v : g.neighbors(u))
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                members.push_back(v);
            }
    }
    std::ranges::sort(members);
    return members;
}

void sortMembers(Cover &cover) {
    for (auto &c : cover.communities) {
        std::ranges::sort(c.members);
        const auto tail = std::ranges::unique(c.members);
        c.members.erase(tail.begin(), tail.end());
    }
}

void assignClosestSeed(const Graph &g, Cover &cover) {
    std::vector<DistanceRow> rows;
    rows.reserve(cover.communities.size());
    for (const auto &c : cover.communities)
        rows.push_back(bfsDistances(g, c.seed));

    for (NodeId u : cover.unmappedBeforeAssignment) {
        HopCount best = kUnreachable;
        for (const auto &row : rows)
            best = std::min(best, row.dist[u]);
        if (best == kUnreachable) {
            cover.residual.push_back(u);
            continue;
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].dist[u] == best)
                cover.communities[i].members.push_back(u);
    }
}

void assignMaxDegreeNeighbor(const Graph &g, Cover &cover) {
    const std::size_t n = g.numberOfNodes();
    std::vector<std::vector<std::size_t>> memberOf(n);
    for (std::size_t i = 0; i < cover.communities.size(); ++i)
        for (NodeId u : cover.communities[i].members)
            memberOf[u].push_back(i);

    NodeSet pending = cover.unmappedBeforeAssignment;
    std::vector<std::pair<NodeId, NodeId>> adopt; // (node, neighbour it copies)
    while (!pending.empty()) {
        adopt.clear();
        // Decisions in one sweep only see nodes mapped before the sweep started.
        for (NodeId u : pending) {
            std::optional<NodeId> best;
            for (NodeId v : g.neighbors(u)) {
                if (memberOf[v].empty())
                    continue;
                if (!best || g.degree(v) > g.degree(*best))
                    best = v;
            }
            if (best)
                adopt.emplace_back(u, *best);
        }
        if (adopt.empty())
            break;
        for (auto [u, v] : adopt)
            memberOf[u] = memberOf[v];
        for (auto [u, v] : adopt)
            for (std::size_t i : memberOf[u])
                cover.communities[i].members.push_back(u);
        std::erase_if(pending, [&](NodeId u) { return !memberOf[u].empty(); });
    }
    cover.residual = std::move(pending);
}

} // namespace

SeedDistanceMatrix seedDistanceMatrix(const Graph &g, std::span<const NodeId> seeds) {
    requireSeeds(g, seeds);
    const std::size_t k = seeds.size();
    std::vector<HopCount> dist(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const auto row = bfsDistances(g, seeds[i]);
        for (std::size_t j = 0; j < k; ++j)
            dist[i * k + j] = row.dist[seeds[j]];
    }
    return {std::vector<NodeId>(seeds.begin(), seeds.end()), std::move(dist)};
}

HopCount expansionRadius(const SeedDistanceMatrix &matrix) {
    HopCount best = kUnreachable;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = i + 1; j < matrix.size(); ++j)
            best = std::min(best, matrix.at(i, j));
    // a repeated seed gives distance 0, which would make an empty ball of neighbours
    if (best == kUnreachable || best == 0)
        return 1;
    return best;
}

Cover expandSeeds(const Graph &g, std::span<const NodeId> seeds, HopCount radius) {
    requireSeeds(g, seeds);
    if (radius < 1)
        throw DomainError("expansion radius must be at least 1");

    Cover cover;
    cover.radius = radius;
    std::vector<char> covered(g.numberOfNodes(), 0);
    cover.communities.reserve(seeds.size());
    for (NodeId s : seeds) {
        Community c{s, ball(g, s, radius)};
        for (NodeId u : c.members)
            covered[u] = 1;
        cover.communities.push_back(std::move(c));
    }
    for (NodeId u = 0; u < g.numberOfNodes(); ++u)
        if (!covered[u])
            cover.unmappedBeforeAssignment.push_back(u);
    return cover;
}

Cover assignUnmapped(const Graph &g, Cover cover, const ExpansionConfig &cfg) {
    cover.residual.clear();
    switch (cfg.unmappedStrategy) {
    case UnmappedStrategy::ClosestSeed:
        assignClosestSeed(g, cover);
        break;
    case UnmappedStrategy::MaxDegreeNeighbor:
        assignMaxDegreeNeighbor(g, cover);
        break;
    }
    sortMembers(cover);
    return cover;
}

Cover growCommunities(const Graph &g, std::span<const NodeId> seeds,
                      const ExpansionConfig &expansion) {
    const HopCount radius = expansionRadius(seedDistanceMatrix(g, seeds));
    return assignUnmapped(g, expandSeeds(g, seeds, radius), expansion);
}

Detection detectCommunities(const Graph &g, const SeedRankings &rankings, std::size_t delta,
                            const ExpansionConfig &expansion) {
    Detection d{selectSeeds(rankings, delta), {}};
    if (d.seeds.empty())
        throw EmptySeedSetError(delta, d.seeds.tau);
    d.cover = growCommunities(g, d.seeds.seeds, expansion);
    return d;
}

Detection detectCommunities(const Graph &g, const SeedSelectionConfig &selection,
                            const ExpansionConfig &expansion) {
    threshold(g.numberOfNodes(), selection.delta);
    return detectCommunities(
        g, computeSeedRankings(g, selection.solver, selection.clusteringOrder), selection.delta,
        expansion);
}

} // namespace seedcomm
