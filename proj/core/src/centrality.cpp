#include <seedcomm/centrality.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <seedcomm/error.hpp>

namespace seedcomm {

std::string_view toString(Measure m) {
    switch (m) {
    case Measure::Degree:
        return "degree";
    case Measure::InDegree:
        return "in_degree";
    case Measure::OutDegree:
        return "out_degree";
    case Measure::Closeness:
        return "closeness";
    case Measure::Betweenness:
        return "betweenness";
    case Measure::Eigenvector:
        return "eigenvector";
    case Measure::PageRank:
        return "pagerank";
    case Measure::LocalClustering:
        return "lcc";
    }
    return "unknown";
}

void IterativeSolveConfig::validate() const {
    if (!(tolerance > 0.0))
        throw DomainError("solver tolerance must be positive");
    if (maxIterations == 0)
        throw DomainError("solver max_iterations must be at least 1");
    if (!(damping > 0.0 && damping < 1.0))
        throw DomainError("PageRank damping must lie in (0, 1)");
}

Ranking rankNodes(const CentralityScores &scores, SortOrder order) {
    Ranking r{scores.measure, order, std::vector<NodeId>(scores.size())};
    std::iota(r.nodes.begin(), r.nodes.end(), NodeId{0});
    const auto &v = scores.values;
    if (order == SortOrder::Descending)
        std::ranges::sort(r.nodes, [&](NodeId a, NodeId b) {
            return v[a] != v[b] ? v[a] > v[b] : a < b;
        });
    else
        std::ranges::sort(r.nodes, [&](NodeId a, NodeId b) {
            return v[a] != v[b] ? v[a] < v[b] : a < b;
        });
    return r;
}

CentralityScores degreeCentrality(const Graph &g) {
    CentralityScores s{Measure::Degree, std::vector<double>(g.numberOfNodes())};
    for (NodeId u = 0; u < g.numberOfNodes(); ++u)
        s.values[u] = static_cast<double>(g.degree(u));
    return s;
}

namespace {

CentralityScores arcDegree(Measure m, std::size_t n, std::span<const Edge> arcs, bool heads) {
    CentralityScores s{m, std::vector<double>(n, 0.0)};
    for (auto [tail, head] : arcs) {
        if (tail >= n || head >= n)
            throw DomainError("arc endpoint out of range");
        s.values[heads ? head : tail] += 1.0;
    }
    return s;
}

double l1Distance(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += std::abs(a[i] - b[i]);
    return d;
}

} // namespace

CentralityScores inDegreeCentrality(std::size_t n, std::span<const Edge> arcs) {
    return arcDegree(Measure::InDegree, n, arcs, true);
}

CentralityScores outDegreeCentrality(std::size_t n, std::span<const Edge> arcs) {
    return arcDegree(Measure::OutDegree, n, arcs, false);
}

CentralityScores closenessCentrality(const Graph &g) {
    const std::size_t n = g.numberOfNodes();
    CentralityScores s{Measure::Closeness, std::vector<double>(n, 0.0)};
    for (NodeId u = 0; u < n; ++u) {
        const auto row = bfsDistances(g, u);
        std::size_t reach = 0;
        std::size_t total = 0;
        for (HopCount d : row.dist)
            if (d != kUnreachable) {
                ++reach;
                total += d;
            }
        if (total > 0)
            s.values[u] = static_cast<double>(reach) / static_cast<double>(total);
    }
    return s;
}

CentralityScores betweennessCentrality(const Graph &g) {
    const std::size_t n = g.numberOfNodes();
    CentralityScores s{Measure::Betweenness, std::vector<double>(n, 0.0)};

    std::vector<NodeId> stack;
    std::vector<NodeId> queue;
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::int64_t> dist(n);
    stack.reserve(n);
    queue.reserve(n);

    for (NodeId src = 0; src < n; ++src) {
        std::ranges::fill(sigma, 0.0);
        std::ranges::fill(delta, 0.0);
        std::ranges::fill(dist, -1);
        stack.clear();
        queue.clear();

        sigma[src] = 1.0;
        dist[src] = 0;
        queue.push_back(src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            stack.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if (dist[v] == dist[u] + 1)
                    sigma[v] += sigma[u];
            }
        }
        // Predecessors of w are exactly its neighbors one level closer to src.
        while (!stack.empty()) {
            const NodeId w = stack.back();
            stack.pop_back();
            for (NodeId v : g.neighbors(w))
                if (dist[v] == dist[w] - 1)
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != src)
                s.values[w] += delta[w];
        }
    }
    // every unordered pair was counted from both endpoints
    for (double &b : s.values)
        b /= 2.0;
    return s;
}

CentralityScores eigenvectorCentrality(const Graph &g, const IterativeSolveConfig &cfg) {
    cfg.validate();
    if (g.numberOfEdges() == 0)
        throw DomainError("eigenvector centrality needs at least one edge");

    const std::size_t n = g.numberOfNodes();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> next(n);
    double gap = 0.0;

    for (std::size_t iter = 1; iter <= cfg.maxIterations; ++iter) {
        for (NodeId u = 0; u < n; ++u) {
            double acc = x[u];
            for (NodeId v : g.neighbors(u))
                acc += x[v];
            next[u] = acc;
        }
        double norm = 0.0;
        for (double val : next)
            norm += val * val;
        norm = std::sqrt(norm);
        for (double &val : next)
            val /= norm;

        gap = l1Distance(next, x);
        x.swap(next);
        if (gap < cfg.tolerance)
            return {Measure::Eigenvector, std::move(x)};
    }
    throw ConvergenceError("eigenvector power iteration did not converge in " +
                               std::to_string(cfg.maxIterations) + " iterations",
                           std::move(x), gap, cfg.maxIterations);
}

CentralityScores pageRankCentrality(const Graph &g, const IterativeSolveConfig &cfg) {
    cfg.validate();
    const std::size_t n = g.numberOfNodes();
    if (n == 0)
        throw DomainError("PageRank needs at least one node");

    const double alpha = cfg.damping;
    const double teleport = (1.0 - alpha) / static_cast<double>(n);
    std::vector<double> p(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    std::vector<double> share(n);
    double gap = 0.0;

    for (std::size_t iter = 1; iter <= cfg.maxIterations; ++iter) {
        double dangling = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            const std::size_t k = g.degree(u);
            if (k == 0) {
                dangling += p[u];
                share[u] = 0.0;
            } else {
                share[u] = p[u] / static_cast<double>(k);
            }
        }
        const double base = teleport + alpha * dangling / static_cast<double>(n);
        double total = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            double acc = 0.0;
            for (NodeId v : g.neighbors(u))
                acc += share[v];
            next[u] = base + alpha * acc;
            total += next[u];
        }
        // keep the iterate exactly stochastic despite rounding drift
        for (double &val : next)
            val /= total;

        gap = l1Distance(next, p);
        p.swap(next);
        if (gap < cfg.tolerance)
            return {Measure::PageRank, std::move(p)};
    }
    throw ConvergenceError("PageRank did not converge in " + std::to_string(cfg.maxIterations) +
                               " iterations",
                           std::move(p), gap, cfg.maxIterations);
}

CentralityScores localClustering(const Graph &g) {
    const std::size_t n = g.numberOfNodes();
    CentralityScores s{Measure::LocalClustering, std::vector<double>(n, 0.0)};
    std::vector<char> mark(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        const auto adj = g.neighbors(u);
        const std::size_t k = adj.size();
        if (k < 2)
            continue;
        for (NodeId v : adj)
            mark[v] = 1;
        std::size_t links = 0;
        for (NodeId v : adj)
            for (NodeId w : g.neighbors(v))
                if (w > v && mark[w])
                    ++links;
        for (NodeId v : adj)
            mark[v] = 0;
        s.values[u] = 2.0 * static_cast<double>(links) /
                      (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return s;
}

} // namespace seedcomm
