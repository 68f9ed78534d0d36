#include "pebbling/graph.hpp"

#include "pebbling/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace pebbling {

DistanceMatrix::DistanceMatrix(int order, std::vector<int> entries) :
    order_(order),
    entries_(std::move(entries))
{
    for (int d : entries_) {
        if (d == infinite)
            all_finite_ = false;
        else
            max_finite_ = std::max(max_finite_, d);
    }
}

Graph::Graph(int order, std::span<const Edge> edges) :
    order_(order)
{
    if (order < 0)
        throw PreconditionError("graph order must be non-negative");

    matrix_.assign(static_cast<std::size_t>(order) * order, 0);
    adjacency_.resize(order);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= order || b >= order)
            throw PreconditionError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                    "} out of range for order " + std::to_string(order));
        if (a == b)
            throw PreconditionError("self-loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        auto & cell = matrix_[static_cast<std::size_t>(a) * order + b];
        if (cell)
            continue;
        cell = 1;
        matrix_[static_cast<std::size_t>(b) * order + a] = 1;
        edges_.emplace_back(a, b);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto & nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());

    distances_ = all_pairs_distances(*this);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    return adjacency_.at(v);
}

DistanceMatrix all_pairs_distances(const Graph & g)
{
    const int n = g.order();
    std::vector<int> entries(static_cast<std::size_t>(n) * n, DistanceMatrix::infinite);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        int * row = entries.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u))
                if (row[w] == DistanceMatrix::infinite) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    return DistanceMatrix(n, std::move(entries));
}

int min_degree(const Graph & g)
{
    if (g.order() == 0)
        throw PreconditionError("min_degree of the empty graph");
    int best = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph & g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

int diameter(const Graph & g)
{
    if (g.order() == 0)
        throw PreconditionError("diameter of the empty graph");
    const auto & d = g.distances();
    return d.all_finite() ? d.max_finite() : DistanceMatrix::infinite;
}

bool is_connected(const Graph & g)
{
    return g.distances().all_finite();
}

std::vector<Vertex> neighborhood(const Graph & g, Vertex v)
{
    if (!g.contains(v))
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    auto nbrs = g.neighbors(v);
    return {nbrs.begin(), nbrs.end()};
}

std::vector<std::vector<Vertex>> connected_components(const Graph & g)
{
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> component;
        for (Vertex v = s; v < g.order(); ++v)
            if (g.distance(s, v) != DistanceMatrix::infinite) {
                seen[v] = true;
                component.push_back(v);
            }
        result.push_back(std::move(component));
    }
    return result;
}

Graph induced_subgraph(const Graph & g, std::span<const Vertex> vertices)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index.at(vertices[i]) = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (index[a] >= 0 && index[b] >= 0)
            edges.emplace_back(index[a], index[b]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

namespace
{
    bool parse_int(std::string_view token, int & out)
    {
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
        return ec == std::errc() && ptr == token.data() + token.size();
    }

    std::vector<std::string_view> split_ws(std::string_view line)
    {
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        return tokens;
    }
}

Graph parse_edge_list(std::string_view text)
{
    int order = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;

        if (tokens[0] == "n") {
            if (order >= 0)
                throw FormatError("duplicate 'n' header", line_no);
            if (tokens.size() != 2 || !parse_int(tokens[1], order) || order < 0)
                throw FormatError("expected 'n <count>'", line_no);
            continue;
        }
        if (order < 0)
            throw FormatError("edge before 'n <count>' header", line_no);
        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw FormatError("expected 'u v' with two integer vertex labels", line_no);
        if (u < 0 || v < 0)
            throw FormatError("negative vertex label", line_no);
        if (u >= order || v >= order)
            throw FormatError("vertex label >= n (" + std::to_string(order) + ")", line_no);
        if (u == v)
            throw FormatError("self-loop at vertex " + std::to_string(u), line_no);
        edges.emplace_back(u, v);
    }
    if (order < 0)
        throw FormatError("missing 'n <count>' header");
    return Graph(order, edges);
}

std::string format_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [a, b] : g.edges())
        out << a << ' ' << b << '\n';
    return out.str();
}

std::uint64_t fingerprint(const Graph & g)
{
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.order()));
    for (auto [a, b] : g.edges()) {
        mix(static_cast<std::uint64_t>(a));
        mix(static_cast<std::uint64_t>(b));
    }
    return h;
}

} // namespace pebbling
