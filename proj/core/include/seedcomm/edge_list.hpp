#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <seedcomm/graph.hpp>

namespace seedcomm {

/**
 * Result of reading an edge-list file.
 *
 * Accepted syntax, one record per line:
 *   - `u v` or `u,v` (any run of whitespace and/or commas separates the two labels)
 *   - lines whose first non-blank character is '#' or '%' are comments
 *   - `nodes: <count>` declares labels "0".."count-1"; `nodes: a b c` declares those labels.
 *     Declared labels take indices before any label first seen later in the file.
 *   - `orientation: directed` marks the file as an arc list; arcs are kept for in/out degree.
 *
 * The undirected graph always merges u->v and v->u and drops self-loops.
 */
struct EdgeList {
    Graph graph;
    /// Arcs (tail, head) in file order with self-loops removed; duplicates kept.
    std::vector<Edge> arcs;
    bool directed = false;
    std::size_t selfLoopsDropped = 0;
    std::size_t duplicateEdgesMerged = 0;
};

/// Throws ParseError (with the 1-based line number) on a malformed record.
EdgeList readEdgeList(std::istream &in);
EdgeList readEdgeList(std::string_view text);

/// Throws std::runtime_error when the file cannot be opened.
EdgeList readEdgeListFile(const std::filesystem::path &path);

/// Canonical form: one `label_u label_v` line per edge, u < v by index, lexicographic order.
/// A `nodes:` header is emitted first when the graph has isolated nodes, so the round trip is
/// lossless in that case.
void writeEdgeList(const Graph &g, std::ostream &out);

} // namespace seedcomm
