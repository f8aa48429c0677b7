#include <seedcomm/graph.hpp>

#include <algorithm>

#include <seedcomm/error.hpp>

namespace seedcomm {

Graph Graph::fromEdges(std::vector<std::string> labels, std::span<const Edge> edges,
                       std::size_t *selfLoops, std::size_t *duplicates) {
    Graph g;
    const std::size_t n = labels.size();
    if (n > std::numeric_limits<NodeId>::max())
        throw DomainError("graph too large for 32-bit node ids");

    g.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.index_.emplace(labels[i], static_cast<NodeId>(i)).second)
            throw DomainError("duplicate node label '" + labels[i] + "'");
    }
    g.labels_ = std::move(labels);

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    std::size_t loops = 0;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw DomainError("edge endpoint out of range");
        if (u == v) {
            ++loops;
            continue;
        }
        canon.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::ranges::sort(canon);
    const auto tail = std::ranges::unique(canon);
    const std::size_t dups = static_cast<std::size_t>(tail.size());
    canon.erase(tail.begin(), tail.end());

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : canon) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : canon) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    g.numEdges_ = canon.size();

    if (selfLoops)
        *selfLoops = loops;
    if (duplicates)
        *duplicates = dups;
    return g;
}

Graph Graph::fromEdges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return fromEdges(std::move(labels), edges);
}

void Graph::requireNode(NodeId u) const {
    if (!hasNode(u))
        throw DomainError("node " + std::to_string(u) + " not in graph (n=" +
                          std::to_string(numberOfNodes()) + ")");
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
    requireNode(u);
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::size_t Graph::degree(NodeId u) const {
    requireNode(u);
    return offsets_[u + 1] - offsets_[u];
}

bool Graph::hasEdge(NodeId u, NodeId v) const {
    const auto adj = neighbors(u);
    requireNode(v);
    return std::ranges::binary_search(adj, v);
}

const std::string &Graph::label(NodeId u) const {
    requireNode(u);
    return labels_[u];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    const auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(numEdges_);
    for (NodeId u = 0; u < numberOfNodes(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

DistanceRow bfsDistances(const Graph &g, NodeId source) {
    if (!g.hasNode(source))
        throw DomainError("BFS source " + std::to_string(source) + " not in graph");
    DistanceRow row{source, std::vector<HopCount>(g.numberOfNodes(), kUnreachable)};
    std::vector<NodeId> frontier{source};
    std::vector<NodeId> next;
    row.dist[source] = 0;
    HopCount level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (NodeId u : frontier)
            for (NodeId v : g.neighbors(u))
                if (row.dist[v] == kUnreachable) {
                    row.dist[v] = level;
                    next.push_back(v);
                }
        frontier.swap(next);
    }
    return row;
}

double graphDensity(const Graph &g) {
    const auto n = static_cast<double>(g.numberOfNodes());
    if (g.numberOfNodes() < 2)
        throw DomainError("graph density needs at least two nodes");
    return static_cast<double>(g.numberOfEdges()) / (n * (n - 1.0) / 2.0);
}

namespace {

std::vector<char> membershipMask(const Graph &g, std::span<const NodeId> members) {
    std::vector<char> mask(g.numberOfNodes(), 0);
    for (NodeId u : members) {
        if (!g.hasNode(u))
            throw DomainError("member " + std::to_string(u) + " not in graph");
        mask[u] = 1;
    }
    return mask;
}

} // namespace

std::size_t inducedEdgeCount(const Graph &g, std::span<const NodeId> members) {
    const auto mask = membershipMask(g, members);
    std::size_t count = 0;
    for (NodeId u = 0; u < g.numberOfNodes(); ++u) {
        if (!mask[u])
            continue;
        for (NodeId v : g.neighbors(u))
            if (u < v && mask[v])
                ++count;
    }
    return count;
}

std::size_t boundaryEdgeCount(const Graph &g, std::span<const NodeId> members) {
    const auto mask = membershipMask(g, members);
    std::size_t count = 0;
    for (NodeId u = 0; u < g.numberOfNodes(); ++u) {
        if (!mask[u])
            continue;
        for (NodeId v : g.neighbors(u))
            if (!mask[v])
                ++count;
    }
    return count;
}

NodeSet toNodeSet(const Graph &g, std::span<const NodeId> members) {
    NodeSet out(members.begin(), members.end());
    for (NodeId u : out)
        if (!g.hasNode(u))
            throw DomainError("member " + std::to_string(u) + " not in graph");
    std::ranges::sort(out);
    const auto tail = std::ranges::unique(out);
    out.erase(tail.begin(), tail.end());
    return out;
}

} // namespace seedcomm
