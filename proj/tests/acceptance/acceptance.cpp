// Acceptance report: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <seedcomm/datasets.hpp>
#include <seedcomm/expansion.hpp>
#include <seedcomm/quality.hpp>
#include <seedcomm/seed_select.hpp>

#include "suites.hpp"

using namespace seedcomm;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
    bool pass;
    std::string detail;
};

std::string join(const std::vector<std::size_t> &v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

Line datasetFidelity() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto &info : builtinDatasets()) {
        const auto g = loadBuiltinDataset(info.name).graph;
        const double avg = 2.0 * static_cast<double>(g.numberOfEdges()) /
                           static_cast<double>(g.numberOfNodes());
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s (%zu,%zu) avg %.3f; ", std::string(info.name).c_str(),
                      g.numberOfNodes(), g.numberOfEdges(), avg);
        detail += buf;
        ok = ok && g.numberOfNodes() == info.nodes && g.numberOfEdges() == info.edges &&
             std::abs(avg - info.averageDegree) <= 1e-3;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    detail += "load time " + std::to_string(secs) + " s";
    return {ok && secs < 1.0, detail};
}

Line thresholdRow() {
    std::vector<std::size_t> row;
    for (std::size_t d = 1; d <= 10; ++d)
        row.push_back(threshold(34, d));
    const std::vector<std::size_t> expected{34, 17, 11, 8, 7, 6, 5, 4, 4, 3};
    return {row == expected, "tau " + join(row)};
}

Line seedCounts() {
    const auto g = loadBuiltinDataset("karate").graph;
    std::vector<std::size_t> deltas(10);
    std::iota(deltas.begin(), deltas.end(), 1);
    std::vector<std::size_t> counts;
    for (const auto &row : sweepDelta(g, deltas))
        counts.push_back(row.size());
    const std::vector<std::size_t> reference{34, 10, 6, 5, 4, 3, 3, 2, 2, 2};
    bool ok = counts[0] == 34 && counts[5] == 3;
    for (std::size_t i = 0; i < 10; ++i) {
        const auto diff = counts[i] > reference[i] ? counts[i] - reference[i] : reference[i] - counts[i];
        ok = ok && diff <= 1;
        if (i > 0)
            ok = ok && counts[i] <= counts[i - 1];
    }
    return {ok, "|S| " + join(counts) + " vs reference " + join(reference)};
}

Line goodness() {
    const std::pair<const char *, std::size_t> runs[] = {{"karate", 6}, {"dolphin", 3}, {"football", 3}};
    bool ok = true;
    std::string detail;
    for (auto [name, delta] : runs) {
        const auto g = loadBuiltinDataset(name).graph;
        const auto d = detectCommunities(g, SeedSelectionConfig{delta});
        const auto report = evaluateCover(g, d.cover);
        const std::size_t k = d.seeds.size();
        bool thisOk = report.allPass;
        if (std::string(name) == "karate")
            thisOk = thisOk && report.rho == 78.0 / 561.0;
        else
            thisOk = thisOk && k >= 2 && k <= 6;
        std::size_t passing = 0;
        for (const auto &c : report.communities)
            passing += c.passes;
        detail += std::string(name) + " delta=" + std::to_string(delta) + " seeds=" +
                  std::to_string(k) + " passing=" + std::to_string(passing) + "/" +
                  std::to_string(report.communities.size()) + "; ";
        ok = ok && thisOk;
    }
    return {ok, detail};
}

Line coverage() {
    const std::pair<const char *, std::size_t> runs[] = {{"karate", 6}, {"dolphin", 3}, {"football", 3}};
    bool ok = true;
    std::string detail;
    for (auto [name, delta] : runs)
        for (auto s : {UnmappedStrategy::ClosestSeed, UnmappedStrategy::MaxDegreeNeighbor}) {
            const auto g = loadBuiltinDataset(name).graph;
            const auto d = detectCommunities(g, SeedSelectionConfig{delta}, ExpansionConfig{s});
            std::vector<char> seen(g.numberOfNodes(), 0);
            for (const auto &c : d.cover.communities)
                for (NodeId u : c.members)
                    seen[u] = 1;
            const auto covered = static_cast<std::size_t>(std::ranges::count(seen, 1));
            ok = ok && covered == g.numberOfNodes() && d.cover.residual.empty() &&
                 d.cover.communities.size() == d.seeds.size();
            if (s == UnmappedStrategy::ClosestSeed)
                detail += std::string(name) + " " + std::to_string(covered) + "/" +
                          std::to_string(g.numberOfNodes()) + " covered by " +
                          std::to_string(d.cover.communities.size()) + " communities; ";
        }
    return {ok, detail + "both unmapped strategies checked"};
}

Line oracles() {
    const std::pair<const char *, std::function<suite::Result()>> parts[] = {
        {"bfs/floyd-warshall", [] { return suite::bfsAgainstFloydWarshall(); }},
        {"eigenvector+pagerank/dense", [] { return suite::spectralAgainstDense(); }},
        {"betweenness/enumeration", [] { return suite::betweennessAgainstEnumeration(); }},
        {"densities/pairs", [] { return suite::densitiesAgainstPairs(); }},
    };
    bool ok = true;
    std::string detail;
    for (const auto &[name, run] : parts) {
        const auto r = run();
        ok = ok && r.pass;
        detail += std::string(name) + ": " + suite::describe(r) + "; ";
    }
    return {ok, detail};
}

Line invariance() {
    const std::pair<const char *, std::function<suite::Result()>> parts[] = {
        {"permutation", [] { return suite::permutationEquivariance(); }},
        {"determinism", [] { return suite::determinism(); }},
        {"delta=1", [] { return suite::deltaOneSelectsAll(); }},
    };
    bool ok = true;
    std::string detail;
    for (const auto &[name, run] : parts) {
        const auto r = run();
        ok = ok && r.pass;
        detail += std::string(name) + ": " + std::to_string(r.cases) + " cases" +
                  (r.pass ? "" : " FAILED " + r.detail) + "; ";
    }
    return {ok, detail};
}

Line runtime() {
    const std::tuple<const char *, std::size_t, double> runs[] = {
        {"karate", 6, 1.0}, {"dolphin", 3, 1.0}, {"football", 3, 2.0}};
    bool ok = true;
    std::string detail;
    for (auto [name, delta, bound] : runs) {
        const auto g = loadBuiltinDataset(name).graph;
        std::vector<double> samples;
        for (int rep = 0; rep < 7; ++rep) {
            const auto t0 = Clock::now();
            const auto d = detectCommunities(g, SeedSelectionConfig{delta});
            const auto report = evaluateCover(g, d.cover);
            samples.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
            if (report.communities.empty())
                ok = false;
        }
        std::ranges::sort(samples);
        const double median = samples[samples.size() / 2];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s median %.6f s (bound %.0f s); ", name, median, bound);
        detail += buf;
        ok = ok && median < bound;
    }
    return {ok, detail + "7 repetitions each"};
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Line()>> criteria[] = {
        {"1 dataset fidelity", datasetFidelity},
        {"2 threshold row", thresholdRow},
        {"3 karate seed counts", seedCounts},
        {"4 goodness inequality", goodness},
        {"5 coverage", coverage},
        {"6 oracle suites", oracles},
        {"7 invariance suite", invariance},
        {"8 runtime", runtime},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        Line line{false, ""};
        try {
            line = check();
        } catch (const std::exception &e) {
            line = {false, std::string("exception: ") + e.what()};
        }
        failed += line.pass ? 0 : 1;
        std::printf("%s criterion %s: %s\n", line.pass ? "PASS" : "FAIL", name, line.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
