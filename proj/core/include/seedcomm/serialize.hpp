#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <seedcomm/centrality.hpp>
#include <seedcomm/expansion.hpp>
#include <seedcomm/graph.hpp>
#include <seedcomm/quality.hpp>
#include <seedcomm/seed_select.hpp>

namespace seedcomm {

/// printf("%.12g")-style text, locale independent.
std::string formatScore(double x);

/// "label,measure,score", one row per node and measure, nodes in index order.
void writeScoresCsv(const Graph &g, std::span<const CentralityScores> scores, std::ostream &out);

/// "delta,tau,seed_count,seed_labels"; labels are ';'-joined in degree-ranking order.
void writeSweepCsv(const Graph &g, std::span<const SeedSet> rows, std::ostream &out);
void writeSweepJson(const Graph &g, std::span<const SeedSet> rows, std::ostream &out);

/// τ, |S| and every seed's 1-based rank under the four seed measures.
void writeSeedsJson(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds,
                    std::ostream &out);
/// "seed_label,degree_rank,lcc_rank,eigenvector_rank,pagerank_rank"
void writeSeedsCsv(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds,
                   std::ostream &out);
void writeSeedsTable(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds,
                     std::ostream &out);

/// {"radius", "communities": [{"seed_label", "member_labels"}], "residual"}
void writeCoverJson(const Graph &g, const Cover &cover, std::ostream &out);
/// "node_label,community_index"; an overlapping node emits one row per community.
void writeCoverCsv(const Graph &g, const Cover &cover, std::ostream &out);

/// "community,n_c,m_int,m_bnd,delta_int,delta_ext,rho,passes"
void writeReportCsv(const DensityReport &report, std::ostream &out);
void writeReportJson(const DensityReport &report, std::ostream &out);

/// Seeds, cover and density report in a single document (the `detect` output).
void writeDetectionJson(const Graph &g, const Detection &d, const DensityReport &report,
                        std::ostream &out);
void writeDetectionTable(const Graph &g, const Detection &d, const DensityReport &report,
                         std::ostream &out);

} // namespace seedcomm
