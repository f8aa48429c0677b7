#include <seedcomm/edge_list.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include <seedcomm/error.hpp>

namespace seedcomm {

namespace {

bool isSeparator(char c) {
    return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && isSeparator(line[i]))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !isSeparator(line[i]))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::string_view trimLeft(std::string_view s) {
    while (!s.empty() && isSeparator(s.front()))
        s.remove_prefix(1);
    return s;
}

bool startsWith(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

class Builder {
public:
    NodeId intern(std::string_view label) {
        auto [it, inserted] = index_.try_emplace(std::string(label), 0);
        if (inserted) {
            it->second = static_cast<NodeId>(labels_.size());
            labels_.push_back(it->first);
        }
        return it->second;
    }

    std::vector<std::string> takeLabels() { return std::move(labels_); }

private:
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::string> labels_;
};

bool parseCount(std::string_view token, std::size_t &value) {
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc() && ptr == end;
}

} // namespace

EdgeList readEdgeList(std::istream &in) {
    EdgeList result;
    Builder builder;
    std::string line;
    std::size_t lineNo = 0;

    while (std::getline(in, line)) {
        ++lineNo;
        const std::string_view body = trimLeft(line);
        if (body.empty() || body.front() == '#' || body.front() == '%')
            continue;

        if (startsWith(body, "nodes:")) {
            const auto tokens = tokenize(body.substr(6));
            std::size_t count = 0;
            if (tokens.size() == 1 && parseCount(tokens.front(), count)) {
                for (std::size_t i = 0; i < count; ++i)
                    builder.intern(std::to_string(i));
            } else {
                for (auto t : tokens)
                    builder.intern(t);
            }
            continue;
        }
        if (startsWith(body, "orientation:")) {
            const auto tokens = tokenize(body.substr(12));
            if (tokens.size() != 1 || (tokens[0] != "directed" && tokens[0] != "undirected"))
                throw ParseError(lineNo, "orientation must be 'directed' or 'undirected'");
            result.directed = tokens[0] == "directed";
            continue;
        }

        const auto tokens = tokenize(body);
        if (tokens.size() != 2)
            throw ParseError(lineNo, "expected two node labels, found " +
                                         std::to_string(tokens.size()) + " tokens");
        const NodeId u = builder.intern(tokens[0]);
        const NodeId v = builder.intern(tokens[1]);
        if (u == v)
            ++result.selfLoopsDropped;
        else
            result.arcs.emplace_back(u, v);
    }
    if (in.bad())
        throw std::runtime_error("I/O error while reading edge list");

    result.graph = Graph::fromEdges(builder.takeLabels(), result.arcs, nullptr,
                                    &result.duplicateEdgesMerged);
    return result;
}

EdgeList readEdgeList(std::string_view text) {
    std::istringstream in{std::string(text)};
    return readEdgeList(in);
}

EdgeList readEdgeListFile(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "'");
    return readEdgeList(in);
}

void writeEdgeList(const Graph &g, std::ostream &out) {
    const auto edges = g.edges();

    // Reloading assigns indices in first-appearance order; only emit the node header
    // when that order would differ from the current one (or isolated nodes would vanish).
    std::vector<char> seen(g.numberOfNodes(), 0);
    NodeId nextExpected = 0;
    bool needHeader = false;
    for (auto [u, v] : edges) {
        for (NodeId w : {u, v}) {
            if (seen[w])
                continue;
            seen[w] = 1;
            if (w != nextExpected)
                needHeader = true;
            ++nextExpected;
        }
    }
    if (nextExpected != g.numberOfNodes())
        needHeader = true;

    if (needHeader) {
        out << "nodes:";
        for (const auto &label : g.labels())
            out << ' ' << label;
        out << '\n';
    }
    for (auto [u, v] : edges)
        out << g.label(u) << ' ' << g.label(v) << '\n';
}

} // namespace seedcomm
