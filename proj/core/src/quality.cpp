#include <seedcomm/quality.hpp>

#include <seedcomm/error.hpp>

namespace seedcomm {

namespace {

double pairDensity(std::size_t edges, double pairs) {
    return pairs > 0.0 ? static_cast<double>(edges) / pairs : 0.0;
}

double intraFromCounts(std::size_t nc, std::size_t internal) {
    const auto k = static_cast<double>(nc);
    return nc < 2 ? 0.0 : pairDensity(internal, k * (k - 1.0) / 2.0);
}

double interFromCounts(std::size_t n, std::size_t nc, std::size_t boundary) {
    if (nc == 0 || nc >= n)
        return 0.0;
    return pairDensity(boundary, static_cast<double>(nc) * static_cast<double>(n - nc));
}

} // namespace

double intraDensity(const Graph &g, std::span<const NodeId> members) {
    const auto set = toNodeSet(g, members);
    return intraFromCounts(set.size(), inducedEdgeCount(g, set));
}

double interDensity(const Graph &g, std::span<const NodeId> members) {
    const auto set = toNodeSet(g, members);
    return interFromCounts(g.numberOfNodes(), set.size(), boundaryEdgeCount(g, set));
}

DensityReport evaluateCover(const Graph &g, const Cover &cover) {
    DensityReport report;
    report.rho = graphDensity(g);
    report.allPass = true;
    report.communities.reserve(cover.communities.size());
    for (std::size_t i = 0; i < cover.communities.size(); ++i) {
        const auto members = toNodeSet(g, cover.communities[i].members);
        CommunityDensity row;
        row.index = i;
        row.seed = cover.communities[i].seed;
        row.size = members.size();
        row.internalEdges = inducedEdgeCount(g, members);
        row.boundaryEdges = boundaryEdgeCount(g, members);
        row.intra = intraFromCounts(row.size, row.internalEdges);
        row.inter = interFromCounts(g.numberOfNodes(), row.size, row.boundaryEdges);
        row.passes = row.intra > report.rho && report.rho > row.inter;
        report.allPass = report.allPass && row.passes;
        report.communities.push_back(row);
    }
    return report;
}

} // namespace seedcomm
