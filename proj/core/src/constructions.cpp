#include "pebbling/constructions.hpp"

#include "pebbling/engine.hpp"
#include "pebbling/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pebbling {

Graph complete_graph(int m)
{
    if (m < 1)
        throw PreconditionError("complete_graph needs m >= 1");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = a + 1; b < m; ++b)
            edges.emplace_back(a, b);
    return Graph(m, edges);
}

Graph path_graph(int n)
{
    if (n < 1)
        throw PreconditionError("path_graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex a = 0; a + 1 < n; ++a)
        edges.emplace_back(a, a + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("cycle_graph needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        edges.emplace_back(a, (a + 1) % n);
    return Graph(n, edges);
}

Graph star_graph(int leaves)
{
    if (leaves < 0)
        throw PreconditionError("star_graph needs a non-negative leaf count");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    std::vector<Edge> edges = a.edges();
    for (auto [x, y] : b.edges())
        edges.emplace_back(x + a.order(), y + a.order());
    return Graph(a.order() + b.order(), edges);
}

ProductGraph lexicographic_product(const Graph & g, const Graph & h)
{
    if (g.order() < 1 || h.order() < 1)
        throw PreconditionError("lexicographic_product needs non-empty factors");
    ProductLabeling labeling(g.order(), h.order());
    std::vector<Edge> edges;
    for (auto [g1, g2] : g.edges())
        for (Vertex h1 = 0; h1 < h.order(); ++h1)
            for (Vertex h2 = 0; h2 < h.order(); ++h2)
                edges.emplace_back(labeling.flat(g1, h1), labeling.flat(g2, h2));
    for (Vertex x = 0; x < g.order(); ++x)
        for (auto [h1, h2] : h.edges())
            edges.emplace_back(labeling.flat(x, h1), labeling.flat(x, h2));
    return {Graph(labeling.order(), edges), labeling};
}

Graph h_family(int m)
{
    if (m < 4 || m % 2 != 0)
        throw PreconditionError("h_family needs an even m >= 4, got " + std::to_string(m));
    HFamilyLabels label{m};
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            bool removed = (i % 2 == 1) && j == i + 1;
            if (removed)
                continue;
            edges.emplace_back(label.u(i), label.u(j));
            edges.emplace_back(label.v(i), label.v(j));
        }
    for (int i = 1; i <= m; ++i) {
        if (i % 2 == 1) {
            edges.emplace_back(label.w(), label.u(i));
            edges.emplace_back(label.w(), label.v(i));
        }
        else
            edges.emplace_back(label.u(i), label.v(i));
    }
    return Graph(2 * m + 1, edges);
}

VertexMap::VertexMap(int target_order, std::vector<Vertex> images) :
    target_order_(target_order),
    images_(std::move(images))
{
    for (Vertex v : images_)
        if (v < 0 || v >= target_order_)
            throw PreconditionError("vertex map image " + std::to_string(v) + " outside 0.." +
                    std::to_string(target_order_ - 1));
}

VertexMap VertexMap::identity(int order)
{
    std::vector<Vertex> images(order);
    for (Vertex v = 0; v < order; ++v)
        images[v] = v;
    return VertexMap(order, std::move(images));
}

bool VertexMap::is_surjective() const
{
    std::vector<bool> hit(target_order_, false);
    for (Vertex v : images_)
        hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

VertexMap parse_vertex_map(std::string_view text)
{
    int target_order = -1;
    std::vector<Vertex> images;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::string token;
        bool first = true;
        while (tokens >> token) {
            if (first && token == "n") {
                if (target_order >= 0 || !images.empty())
                    throw FormatError("'n' header must come first and only once", line_no);
                std::string count;
                if (!(tokens >> count))
                    throw FormatError("expected 'n <target order>'", line_no);
                token = count;
                int value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc() || ptr != token.data() + token.size() || value < 1)
                    throw FormatError("bad target order '" + token + "'", line_no);
                target_order = value;
                first = false;
                continue;
            }
            first = false;
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
                throw FormatError("bad vertex label '" + token + "'", line_no);
            images.push_back(value);
        }
    }
    if (images.empty())
        throw FormatError("vertex map is empty");
    if (target_order < 0)
        target_order = *std::max_element(images.begin(), images.end()) + 1;
    for (Vertex v : images)
        if (v >= target_order)
            throw FormatError("vertex map label " + std::to_string(v) + " >= target order");
    return VertexMap(target_order, std::move(images));
}

Quotient collapse(const Graph & g, const VertexMap & phi, const Distribution & d)
{
    if (phi.source_order() != g.order())
        throw PreconditionError("vertex map source order does not match the graph");
    if (d.order() != g.order())
        throw PreconditionError("distribution order does not match the graph");
    if (!phi.is_surjective())
        throw PreconditionError("vertex map is not surjective");

    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (phi(a) != phi(b))
            edges.emplace_back(phi(a), phi(b));
    Distribution collapsed(phi.target_order());
    for (Vertex v = 0; v < g.order(); ++v)
        collapsed.add(phi(v), d[v]);
    return {Graph(phi.target_order(), edges), std::move(collapsed)};
}

ProductGraph opn_to_ropn_reduction(const Graph & g)
{
    if (g.order() < 2)
        throw PreconditionError("reduction needs at least two vertices");
    if (!is_connected(g))
        throw PreconditionError("reduction needs a connected graph");
    return lexicographic_product(g, complete_graph(g.order()));
}

Distribution product_witness(const Graph & g, const Distribution & d, int m)
{
    const int n = g.order();
    if (d.order() != n)
        throw PreconditionError("distribution order does not match the graph");
    if (m < 1 || 3 * m < n)
        throw PreconditionError("product_witness needs m >= ceil(n/3), got m = " + std::to_string(m));
    if (!is_solvable(g, d))
        throw PreconditionError("product_witness needs a solvable distribution");
    if (n >= 2 && !lone_unmovable_vertices(g, d).empty())
        throw PreconditionError("product_witness needs a normalized distribution "
                                "(every loaded vertex 2-reachable)");

    ProductLabeling labeling(n, m);
    Distribution q(labeling.order());
    const Count size = d.total();
    for (Vertex x = 0; x < n; ++x) {
        if (size == 2 * m && d[x] == size) {
            for (Vertex i = 0; i < m; ++i)
                q.set(labeling.flat(x, i), 2);
            return q;
        }
    }
    for (Vertex x = 0; x < n; ++x) {
        Count pairs = d[x] / 2;
        if (pairs > m - 1)
            throw PreconditionError("vertex " + std::to_string(x) + " holds " + std::to_string(d[x]) +
                    " pebbles, more than the " + std::to_string(2 * m - 1) + " a fibre of K_" +
                    std::to_string(m) + " can spread");
        if (d[x] % 2 == 1)
            q.set(labeling.flat(x, 0), 1);
        for (Vertex i = 1; i <= pairs; ++i)
            q.set(labeling.flat(x, i), 2);
    }
    return q;
}

Distribution fibre_sums(const ProductLabeling & labeling, const Distribution & q)
{
    if (q.order() != labeling.order())
        throw PreconditionError("distribution order does not match the product");
    Distribution d(labeling.outer_order());
    for (Vertex f = 0; f < q.order(); ++f)
        d.add(labeling.pair(f).first, q[f]);
    return d;
}

} // namespace pebbling
