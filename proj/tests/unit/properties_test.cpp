#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "suites.hpp"

using namespace seedcomm;

TEST(Oracle, BfsEqualsFloydWarshall) {
    const auto r = suite::bfsAgainstFloydWarshall();
    EXPECT_TRUE(r.pass) << suite::describe(r);
    EXPECT_EQ(r.cases, 200u);
}

TEST(Oracle, EigenvectorAndPageRankEqualDenseSolvers) {
    const auto r = suite::spectralAgainstDense();
    EXPECT_TRUE(r.pass) << suite::describe(r);
    EXPECT_LE(r.worst, 1e-6);
}

TEST(Oracle, BetweennessEqualsGeodesicEnumeration) {
    const auto r = suite::betweennessAgainstEnumeration();
    EXPECT_TRUE(r.pass) << suite::describe(r);
}

TEST(Oracle, ClosenessEqualsFloydWarshallSums) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 25;
        const auto g = Graph::fromEdges(n, oracle::randomEdges(rng, n, 0.2));
        const auto expect = oracle::closenessByMatrix(oracle::adjacency(g));
        EXPECT_LT(oracle::maxAbsDiff(closenessCentrality(g).values, expect), 1e-14);
    }
}

TEST(Oracle, ClusteringEqualsTripleCount) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 25;
        const auto g = Graph::fromEdges(n, oracle::randomEdges(rng, n, 0.3));
        EXPECT_EQ(localClustering(g).values, oracle::clusteringByTriples(oracle::adjacency(g)));
    }
}

TEST(Oracle, DensitiesEqualPairEnumeration) {
    const auto r = suite::densitiesAgainstPairs();
    EXPECT_TRUE(r.pass) << suite::describe(r);
    EXPECT_EQ(r.worst, 0.0);
}

TEST(Invariance, PermutationEquivariance) {
    const auto r = suite::permutationEquivariance();
    EXPECT_TRUE(r.pass) << suite::describe(r);
}

TEST(Invariance, DeterministicOutput) {
    const auto r = suite::determinism();
    EXPECT_TRUE(r.pass) << suite::describe(r);
}

TEST(Invariance, DeltaOneSelectsEveryNode) {
    const auto r = suite::deltaOneSelectsAll();
    EXPECT_TRUE(r.pass) << suite::describe(r);
}

TEST(Invariance, CoverageAndCommunityCount) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 5 + trial % 40;
        auto edges = oracle::randomEdges(rng, n, 0.15);
        edges.emplace_back(0, 1);
        const auto g = Graph::fromEdges(n, edges);
        const auto fw = oracle::floydWarshall(oracle::adjacency(g));
        const auto rankings = computeSeedRankings(g);
        for (std::size_t delta = 1; delta <= 4; ++delta) {
            const auto seeds = selectSeeds(rankings, delta);
            if (seeds.empty())
                continue;
            for (auto s : {UnmappedStrategy::ClosestSeed, UnmappedStrategy::MaxDegreeNeighbor}) {
                const auto cover = growCommunities(g, seeds.seeds, {s});
                ASSERT_EQ(cover.communities.size(), seeds.size());
                std::vector<char> covered(n, 0);
                for (const auto &c : cover.communities)
                    for (NodeId u : c.members)
                        covered[u] = 1;
                for (NodeId u = 0; u < n; ++u) {
                    const bool reachable = std::ranges::any_of(
                        seeds.seeds, [&](NodeId s0) { return fw[s0][u] != oracle::kInf; });
                    EXPECT_EQ(static_cast<bool>(covered[u]), reachable);
                    EXPECT_EQ(std::ranges::binary_search(cover.residual, u), !reachable);
                }
            }
        }
    }
}
