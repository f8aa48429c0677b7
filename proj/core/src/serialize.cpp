#include <seedcomm/serialize.hpp>

#include <array>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <system_error>

#include <nlohmann/json.hpp>

namespace seedcomm {

namespace {

using nlohmann::json;

json labels(const Graph &g, std::span<const NodeId> nodes) {
    json arr = json::array();
    for (NodeId u : nodes)
        arr.push_back(g.label(u));
    return arr;
}

// CSV field quoting for labels that contain a separator or quote.
std::string csvField(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string joined(const Graph &g, std::span<const NodeId> nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i)
            out += ';';
        out += g.label(nodes[i]);
    }
    return out;
}

json seedsJson(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds) {
    json rows = json::array();
    for (NodeId s : seeds.seeds) {
        const auto r = seedRanks(rankings, s);
        json ranks = json::object();
        for (std::size_t i = 0; i < kSeedMeasures.size(); ++i)
            ranks[std::string(toString(kSeedMeasures[i]))] = r[i];
        rows.push_back({{"label", g.label(s)}, {"ranks", ranks}});
    }
    return {{"delta", seeds.delta}, {"tau", seeds.tau}, {"seed_count", seeds.size()},
            {"seeds", rows}};
}

json coverJson(const Graph &g, const Cover &cover) {
    json comms = json::array();
    for (const auto &c : cover.communities)
        comms.push_back({{"seed_label", g.label(c.seed)}, {"member_labels", labels(g, c.members)}});
    return {{"radius", cover.radius}, {"communities", comms}, {"residual", labels(g, cover.residual)}};
}

json reportJson(const DensityReport &report) {
    json rows = json::array();
    for (const auto &c : report.communities)
        rows.push_back({{"community", c.index},
                        {"n_c", c.size},
                        {"m_int", c.internalEdges},
                        {"m_bnd", c.boundaryEdges},
                        {"delta_int", c.intra},
                        {"delta_ext", c.inter},
                        {"passes", c.passes}});
    return {{"rho", report.rho}, {"all_pass", report.allPass}, {"communities", rows}};
}

void dump(const json &j, std::ostream &out) { out << j.dump(2) << '\n'; }

} // namespace

std::string formatScore(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::general, 12);
    if (res.ec != std::errc{})
        return "nan";
    return std::string(buf.data(), res.ptr);
}

void writeScoresCsv(const Graph &g, std::span<const CentralityScores> scores, std::ostream &out) {
    out << "label,measure,score\n";
    for (NodeId u = 0; u < g.numberOfNodes(); ++u)
        for (const auto &s : scores)
            out << csvField(g.label(u)) << ',' << toString(s.measure) << ','
                << formatScore(s.values.at(u)) << '\n';
}

void writeSweepCsv(const Graph &g, std::span<const SeedSet> rows, std::ostream &out) {
    out << "delta,tau,seed_count,seed_labels\n";
    for (const auto &r : rows)
        out << r.delta << ',' << r.tau << ',' << r.size() << ',' << csvField(joined(g, r.seeds))
            << '\n';
}

void writeSweepJson(const Graph &g, std::span<const SeedSet> rows, std::ostream &out) {
    json arr = json::array();
    for (const auto &r : rows)
        arr.push_back({{"delta", r.delta},
                       {"tau", r.tau},
                       {"seed_count", r.size()},
                       {"seed_labels", labels(g, r.seeds)}});
    dump({{"rows", arr}}, out);
}

void writeSeedsJson(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds,
                    std::ostream &out) {
    dump(seedsJson(g, rankings, seeds), out);
}

void writeSeedsCsv(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds,
                   std::ostream &out) {
    out << "seed_label,degree_rank,lcc_rank,eigenvector_rank,pagerank_rank\n";
    for (NodeId s : seeds.seeds) {
        const auto r = seedRanks(rankings, s);
        out << csvField(g.label(s)) << ',' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3]
            << '\n';
    }
}

void writeSeedsTable(const Graph &g, const SeedRankings &rankings, const SeedSet &seeds,
                     std::ostream &out) {
    out << "delta " << seeds.delta << "  tau " << seeds.tau << "  seeds " << seeds.size() << "\n";
    if (seeds.empty())
        return;
    out << std::left << std::setw(20) << "seed" << std::right;
    for (Measure m : kSeedMeasures)
        out << std::setw(13) << toString(m);
    out << '\n';
    for (NodeId s : seeds.seeds) {
        const auto r = seedRanks(rankings, s);
        out << std::left << std::setw(20) << g.label(s) << std::right;
        for (std::size_t v : r)
            out << std::setw(13) << v;
        out << '\n';
    }
}

void writeCoverJson(const Graph &g, const Cover &cover, std::ostream &out) {
    dump(coverJson(g, cover), out);
}

void writeCoverCsv(const Graph &g, const Cover &cover, std::ostream &out) {
    out << "node_label,community_index\n";
    for (std::size_t i = 0; i < cover.communities.size(); ++i)
        for (NodeId u : cover.communities[i].members)
            out << csvField(g.label(u)) << ',' << i << '\n';
}

void writeReportCsv(const DensityReport &report, std::ostream &out) {
    out << "community,n_c,m_int,m_bnd,delta_int,delta_ext,rho,passes\n";
    for (const auto &c : report.communities)
        out << c.index << ',' << c.size << ',' << c.internalEdges << ',' << c.boundaryEdges << ','
            << formatScore(c.intra) << ',' << formatScore(c.inter) << ','
            << formatScore(report.rho) << ',' << (c.passes ? "true" : "false") << '\n';
}

void writeReportJson(const DensityReport &report, std::ostream &out) {
    dump(reportJson(report), out);
}

void writeDetectionJson(const Graph &g, const Detection &d, const DensityReport &report,
                        std::ostream &out) {
    json doc = {{"delta", d.seeds.delta},
                {"tau", d.seeds.tau},
                {"seed_labels", labels(g, d.seeds.seeds)},
                {"cover", coverJson(g, d.cover)},
                {"report", reportJson(report)}};
    dump(doc, out);
}

void writeDetectionTable(const Graph &g, const Detection &d, const DensityReport &report,
                         std::ostream &out) {
    out << "delta " << d.seeds.delta << "  tau " << d.seeds.tau << "  seeds "
        << d.seeds.size() << "  radius " << d.cover.radius << "  rho "
        << formatScore(report.rho) << '\n';
    out << std::left << std::setw(6) << "#" << std::setw(20) << "seed" << std::right
        << std::setw(6) << "n_c" << std::setw(7) << "m_int" << std::setw(7) << "m_bnd"
        << std::setw(16) << "delta_int" << std::setw(16) << "delta_ext" << std::setw(8)
        << "passes" << '\n';
    for (const auto &c : report.communities)
        out << std::left << std::setw(6) << c.index << std::setw(20) << g.label(c.seed)
            << std::right << std::setw(6) << c.size << std::setw(7) << c.internalEdges
            << std::setw(7) << c.boundaryEdges << std::setw(16) << formatScore(c.intra)
            << std::setw(16) << formatScore(c.inter) << std::setw(8)
            << (c.passes ? "yes" : "no") << '\n';
    if (!d.cover.residual.empty())
        out << "residual (unreachable from every seed): " << joined(g, d.cover.residual) << '\n';
}

} // namespace seedcomm
