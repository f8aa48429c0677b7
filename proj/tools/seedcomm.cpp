// seedcomm: command-line front end for seed-centric overlapping community detection.
//
// Exit codes: 0 ok, 2 bad input or arguments, 3 empty seed set, 4 detect finished but at
// least one community fails delta_int > rho > delta_ext.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/utsname.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <seedcomm/centrality.hpp>
#include <seedcomm/datasets.hpp>
#include <seedcomm/edge_list.hpp>
#include <seedcomm/error.hpp>
#include <seedcomm/expansion.hpp>
#include <seedcomm/quality.hpp>
#include <seedcomm/seed_select.hpp>
#include <seedcomm/serialize.hpp>

namespace {

using namespace seedcomm;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitEmptySeeds = 3;
constexpr int kExitGoodnessWarning = 4;

enum class Format { Json, Csv, Table };

struct RunConfig {
    std::string dataset;
    std::string input;
    std::size_t delta = 0;
    std::string deltaRange;
    UnmappedStrategy strategy = UnmappedStrategy::ClosestSeed;
    IterativeSolveConfig solver;
    Format format = Format::Table;
    std::string output;
    std::string reportOutput;
    std::size_t reps = 5;
    std::vector<std::string> measures;
};

/// Thrown for user mistakes that CLI11 cannot catch by itself.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    std::string source;
    EdgeList list;
};

Loaded load(const RunConfig &cfg) {
    if (cfg.dataset.empty() == cfg.input.empty())
        throw InputError("give exactly one of --dataset NAME or --input PATH");
    if (!cfg.dataset.empty())
        return {cfg.dataset, loadBuiltinDataset(cfg.dataset)};
    Loaded l{cfg.input, readEdgeListFile(cfg.input)};
    if (l.list.selfLoopsDropped)
        std::cerr << "warning: dropped " << l.list.selfLoopsDropped << " self-loop(s)\n";
    if (l.list.duplicateEdgesMerged)
        std::cerr << "warning: merged " << l.list.duplicateEdgesMerged << " duplicate edge(s)\n";
    return l;
}

/// Writes to --output when given, standard output otherwise.
class Sink {
public:
    explicit Sink(const std::string &path) {
        if (path.empty())
            return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_)
            throw InputError("cannot open '" + path + "' for writing");
    }
    std::ostream &stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<std::size_t> parseRange(const std::string &text, std::size_t n) {
    const auto dots = text.find("..");
    std::size_t a = 0;
    std::size_t b = 0;
    try {
        if (dots == std::string::npos) {
            a = b = std::stoul(text);
        } else {
            a = std::stoul(text.substr(0, dots));
            b = text.size() == dots + 2 ? n : std::stoul(text.substr(dots + 2));
        }
    } catch (const std::exception &) {
        throw InputError("--delta-range expects A..B, got '" + text + "'");
    }
    if (a < 1 || a > b)
        throw InputError("--delta-range needs 1 <= A <= B, got '" + text + "'");
    std::vector<std::size_t> out(b - a + 1);
    std::iota(out.begin(), out.end(), a);
    return out;
}

Measure parseMeasure(const std::string &name) {
    for (Measure m : {Measure::Degree, Measure::InDegree, Measure::OutDegree, Measure::Closeness,
                      Measure::Betweenness, Measure::Eigenvector, Measure::PageRank,
                      Measure::LocalClustering})
        if (toString(m) == name)
            return m;
    throw InputError("unknown measure '" + name + "'");
}

CentralityScores computeMeasure(const EdgeList &l, Measure m, const IterativeSolveConfig &cfg) {
    const auto &g = l.graph;
    switch (m) {
    case Measure::Degree:
        return degreeCentrality(g);
    case Measure::InDegree:
        return l.directed ? inDegreeCentrality(g.numberOfNodes(), l.arcs) : degreeCentrality(g);
    case Measure::OutDegree:
        return l.directed ? outDegreeCentrality(g.numberOfNodes(), l.arcs) : degreeCentrality(g);
    case Measure::Closeness:
        return closenessCentrality(g);
    case Measure::Betweenness:
        return betweennessCentrality(g);
    case Measure::Eigenvector:
        return eigenvectorCentrality(g, cfg);
    case Measure::PageRank:
        return pageRankCentrality(g, cfg);
    case Measure::LocalClustering:
        return localClustering(g);
    }
    throw InputError("unknown measure");
}

int cmdDatasets(const RunConfig &cfg) {
    Sink sink(cfg.output);
    auto &out = sink.stream();
    if (cfg.format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &d : builtinDatasets())
            arr.push_back({{"name", d.name},
                           {"nodes", d.nodes},
                           {"edges", d.edges},
                           {"average_degree", d.averageDegree},
                           {"description", d.description}});
        out << nlohmann::json{{"datasets", arr}}.dump(2) << '\n';
    } else if (cfg.format == Format::Csv) {
        out << "name,nodes,edges,average_degree\n";
        for (const auto &d : builtinDatasets())
            out << d.name << ',' << d.nodes << ',' << d.edges << ',' << formatScore(d.averageDegree)
                << '\n';
    } else {
        for (const auto &d : builtinDatasets())
            out << d.name << "  n=" << d.nodes << "  m=" << d.edges
                << "  avg_degree=" << formatScore(d.averageDegree) << "  " << d.description << '\n';
    }
    return kExitOk;
}

int cmdScores(const RunConfig &cfg) {
    const auto loaded = load(cfg);
    std::vector<CentralityScores> scores;
    const std::vector<std::string> names =
        cfg.measures.empty()
            ? std::vector<std::string>{"degree", "closeness", "betweenness", "eigenvector",
                                       "pagerank", "lcc"}
            : cfg.measures;
    for (const auto &name : names)
        scores.push_back(computeMeasure(loaded.list, parseMeasure(name), cfg.solver));

    Sink sink(cfg.output);
    auto &out = sink.stream();
    const auto &g = loaded.list.graph;
    if (cfg.format == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (NodeId u = 0; u < g.numberOfNodes(); ++u) {
            nlohmann::json row{{"label", g.label(u)}};
            for (const auto &s : scores)
                row[std::string(toString(s.measure))] = s.values[u];
            rows.push_back(row);
        }
        out << nlohmann::json{{"nodes", rows}}.dump(2) << '\n';
    } else {
        writeScoresCsv(g, scores, out);
    }
    return kExitOk;
}

int cmdSeeds(const RunConfig &cfg) {
    const auto loaded = load(cfg);
    const auto &g = loaded.list.graph;
    threshold(g.numberOfNodes(), cfg.delta);
    const auto rankings = computeSeedRankings(g, cfg.solver);
    const auto seeds = selectSeeds(rankings, cfg.delta);

    Sink sink(cfg.output);
    auto &out = sink.stream();
    switch (cfg.format) {
    case Format::Json:
        writeSeedsJson(g, rankings, seeds, out);
        break;
    case Format::Csv:
        writeSeedsCsv(g, rankings, seeds, out);
        break;
    case Format::Table:
        writeSeedsTable(g, rankings, seeds, out);
        break;
    }
    if (seeds.empty()) {
        std::cerr << EmptySeedSetError(seeds.delta, seeds.tau).what() << '\n';
        return kExitEmptySeeds;
    }
    return kExitOk;
}

int cmdDetect(const RunConfig &cfg) {
    const auto loaded = load(cfg);
    const auto &g = loaded.list.graph;
    const SeedSelectionConfig sel{cfg.delta, cfg.solver, SortOrder::Ascending};
    const auto detection = detectCommunities(g, sel, ExpansionConfig{cfg.strategy});
    const auto report = evaluateCover(g, detection.cover);

    Sink sink(cfg.output);
    auto &out = sink.stream();
    switch (cfg.format) {
    case Format::Json:
        writeDetectionJson(g, detection, report, out);
        break;
    case Format::Csv:
        writeCoverCsv(g, detection.cover, out);
        if (cfg.reportOutput.empty()) {
            out << '\n';
            writeReportCsv(report, out);
        } else {
            Sink reportSink(cfg.reportOutput);
            writeReportCsv(report, reportSink.stream());
        }
        break;
    case Format::Table:
        writeDetectionTable(g, detection, report, out);
        break;
    }
    if (!detection.cover.residual.empty())
        std::cerr << "warning: " << detection.cover.residual.size()
                  << " node(s) unreachable from every seed\n";
    if (!report.allPass) {
        std::cerr << "warning: not every community satisfies delta_int > rho > delta_ext\n";
        return kExitGoodnessWarning;
    }
    return kExitOk;
}

int cmdSweep(const RunConfig &cfg) {
    const auto loaded = load(cfg);
    const auto &g = loaded.list.graph;
    const auto deltas = parseRange(cfg.deltaRange, g.numberOfNodes());
    const auto rows = sweepDelta(g, deltas, cfg.solver);

    Sink sink(cfg.output);
    auto &out = sink.stream();
    if (cfg.format == Format::Json) {
        writeSweepJson(g, rows, out);
    } else if (cfg.format == Format::Csv) {
        writeSweepCsv(g, rows, out);
    } else {
        out << "delta    tau  seeds  labels\n";
        for (const auto &r : rows) {
            char line[48];
            std::snprintf(line, sizeof line, "%5zu  %5zu  %5zu  ", r.delta, r.tau, r.size());
            out << line;
            for (std::size_t i = 0; i < r.seeds.size(); ++i)
                out << (i ? " " : "") << g.label(r.seeds[i]);
            out << '\n';
        }
    }
    return kExitOk;
}

nlohmann::json machineInfo() {
    nlohmann::json info;
    utsname un{};
    if (uname(&un) == 0)
        info["os"] = std::string(un.sysname) + " " + un.release + " " + un.machine;
    std::ifstream cpu("/proc/cpuinfo");
    for (std::string line; std::getline(cpu, line);)
        if (line.rfind("model name", 0) == 0) {
            info["cpu"] = line.substr(line.find(':') + 2);
            break;
        }
    info["hardware_concurrency"] = std::thread::hardware_concurrency();
#if defined(__clang__)
    info["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
    info["compiler"] = "gcc " __VERSION__;
#endif
    return info;
}

std::string utcTimestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int cmdBench(const RunConfig &cfg) {
    if (cfg.reps < 1)
        throw InputError("--reps must be at least 1");
    const auto loaded = load(cfg);
    const auto &g = loaded.list.graph;
    const SeedSelectionConfig sel{cfg.delta, cfg.solver, SortOrder::Ascending};
    const ExpansionConfig exp{cfg.strategy};

    std::vector<double> samples;
    std::size_t communities = 0;
    for (std::size_t r = 0; r < cfg.reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto detection = detectCommunities(g, sel, exp);
        const auto report = evaluateCover(g, detection.cover);
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double>(t1 - t0).count());
        communities = report.communities.size();
    }
    auto sorted = samples;
    std::ranges::sort(sorted);
    const std::size_t k = sorted.size();
    const double median = k % 2 ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);

    nlohmann::json doc{{"source", loaded.source},
                       {"nodes", g.numberOfNodes()},
                       {"edges", g.numberOfEdges()},
                       {"delta", cfg.delta},
                       {"communities", communities},
                       {"repetitions", cfg.reps},
                       {"samples_s", samples},
                       {"median_s", median},
                       {"min_s", sorted.front()},
                       {"timestamp", utcTimestamp()},
                       {"machine", machineInfo()}};

    Sink sink(cfg.output);
    auto &out = sink.stream();
    if (cfg.format == Format::Json) {
        out << doc.dump(2) << '\n';
    } else if (cfg.format == Format::Csv) {
        out << "repetition,seconds\n";
        for (std::size_t i = 0; i < samples.size(); ++i)
            out << i << ',' << formatScore(samples[i]) << '\n';
    } else {
        out << loaded.source << "  n=" << g.numberOfNodes() << "  m=" << g.numberOfEdges()
            << "  delta=" << cfg.delta << "  reps=" << cfg.reps << '\n'
            << "median " << formatScore(median) << " s  min " << formatScore(sorted.front())
            << " s\n"
            << "machine " << doc["machine"].dump() << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Seed-centric overlapping community detection"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "seedcomm 0.1.0");

    RunConfig cfg;
    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};
    const std::map<std::string, UnmappedStrategy> strategies{
        {"closest", UnmappedStrategy::ClosestSeed}, {"maxdeg", UnmappedStrategy::MaxDegreeNeighbor}};

    auto addInput = [&](CLI::App *sub) {
        auto *ds = sub->add_option("--dataset", cfg.dataset, "Built-in network")
                       ->check(CLI::IsMember({"karate", "dolphin", "football"}));
        auto *in = sub->add_option("--input", cfg.input, "Edge-list file");
        ds->excludes(in);
        sub->add_option("--alpha", cfg.solver.damping, "PageRank damping factor")
            ->capture_default_str();
        sub->add_option("--tol", cfg.solver.tolerance, "Power-iteration L1 tolerance")
            ->capture_default_str();
        sub->add_option("--max-iters", cfg.solver.maxIterations, "Power-iteration cap")
            ->capture_default_str();
    };
    auto addOutput = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "json, csv or table")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output", cfg.output, "Write here instead of standard output");
    };

    auto *datasets = app.add_subcommand("datasets", "List the built-in networks");
    addOutput(datasets);

    auto *scores = app.add_subcommand("scores", "Per-node centrality scores");
    addInput(scores);
    addOutput(scores);
    scores->add_option("--measure", cfg.measures,
                       "degree, in_degree, out_degree, closeness, betweenness, eigenvector, "
                       "pagerank or lcc (repeatable)");

    auto *seeds = app.add_subcommand("seeds", "Superior seed set for one delta");
    addInput(seeds);
    addOutput(seeds);
    seeds->add_option("--delta", cfg.delta, "Split variable, tau = round(n / delta)")->required();

    auto *detect = app.add_subcommand("detect", "Seed selection, expansion and density report");
    addInput(detect);
    addOutput(detect);
    detect->add_option("--delta", cfg.delta, "Split variable, tau = round(n / delta)")->required();
    detect->add_option("--strategy", cfg.strategy, "Unmapped-node rule: closest or maxdeg")
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
    detect->add_option("--report-output", cfg.reportOutput,
                       "With --format csv, write the density report here");

    auto *sweep = app.add_subcommand("sweep", "Seed-set size over a delta range");
    addInput(sweep);
    addOutput(sweep);
    sweep->add_option("--delta-range", cfg.deltaRange, "A..B (B may be omitted for n)")
        ->required();

    auto *bench = app.add_subcommand("bench", "Time the detect pipeline (parsing excluded)");
    addInput(bench);
    addOutput(bench);
    bench->add_option("--delta", cfg.delta, "Split variable")->required();
    bench->add_option("--strategy", cfg.strategy, "closest or maxdeg")
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
    bench->add_option("--reps", cfg.reps, "Repetitions")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*datasets)
            return cmdDatasets(cfg);
        if (*scores)
            return cmdScores(cfg);
        if (*seeds)
            return cmdSeeds(cfg);
        if (*detect)
            return cmdDetect(cfg);
        if (*sweep)
            return cmdSweep(cfg);
        if (*bench)
            return cmdBench(cfg);
    } catch (const EmptySeedSetError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEmptySeeds;
    } catch (const ConvergenceError &e) {
        std::cerr << "error: " << e.what() << " (residual " << e.residual()
                  << "); raise --max-iters or --tol\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
