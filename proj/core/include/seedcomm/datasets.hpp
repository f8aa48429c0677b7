#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include <seedcomm/edge_list.hpp>

namespace seedcomm {

struct DatasetInfo {
    std::string_view name;
    std::size_t nodes;
    std::size_t edges;
    /// 2m / n, rounded to three decimals.
    double averageDegree;
    std::string_view description;
};

/// karate, dolphin, football.
std::span<const DatasetInfo> builtinDatasets();

/// Throws DatasetError for an unknown name.
const DatasetInfo &datasetInfo(std::string_view name);

/**
 * Loads a built-in network. When SEEDCOMM_DATA_DIR is set, `<dir>/<name>.txt` is read instead
 * of the copy compiled into the library. The node and edge counts are checked against
 * datasetInfo(name); a mismatch throws DatasetError.
 */
EdgeList loadBuiltinDataset(std::string_view name);

} // namespace seedcomm
