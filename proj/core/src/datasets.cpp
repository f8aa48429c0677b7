#include <seedcomm/datasets.hpp>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <seedcomm/error.hpp>

namespace seedcomm {

namespace detail {
std::string_view embedded_dataset(std::string_view name);
}

namespace {

constexpr std::array<DatasetInfo, 3> kDatasets{{
    {"karate", 34, 78, 4.588, "Zachary karate club"},
    {"dolphin", 62, 159, 5.129, "Doubtful Sound bottlenose dolphins"},
    {"football", 115, 613, 10.661, "NCAA Division I-A football, fall 2000"},
}};

} // namespace

std::span<const DatasetInfo> builtinDatasets() { return kDatasets; }

const DatasetInfo &datasetInfo(std::string_view name) {
    for (const auto &d : kDatasets)
        if (d.name == name)
            return d;
    throw DatasetError("unknown dataset '" + std::string(name) +
                       "' (expected karate, dolphin or football)");
}

EdgeList loadBuiltinDataset(std::string_view name) {
    const auto &info = datasetInfo(name);

    EdgeList list;
    if (const char *dir = std::getenv("SEEDCOMM_DATA_DIR"); dir && *dir) {
        const auto path = std::filesystem::path(dir) / (std::string(name) + ".txt");
        try {
            list = readEdgeListFile(path);
        } catch (const ParseError &) {
            throw;
        } catch (const std::runtime_error &e) {
            throw DatasetError(e.what());
        }
    } else {
        const auto text = detail::embedded_dataset(name);
        if (text.empty())
            throw DatasetError("dataset '" + std::string(name) + "' was not embedded");
        list = readEdgeList(text);
    }

    const auto &g = list.graph;
    if (g.numberOfNodes() != info.nodes || g.numberOfEdges() != info.edges)
        throw DatasetError("dataset '" + std::string(name) + "' has " +
                           std::to_string(g.numberOfNodes()) + " nodes and " +
                           std::to_string(g.numberOfEdges()) + " edges, expected " +
                           std::to_string(info.nodes) + " and " + std::to_string(info.edges));
    return list;
}

} // namespace seedcomm
