#include "pebbling/enumerate.hpp"

#include "pebbling/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace pebbling {

namespace
{
    void check_order(int n)
    {
        if (n < 0 || n > max_mask_order)
            throw PreconditionError("mask encoding supports 0.." + std::to_string(max_mask_order) + " vertices");
    }

    bool mask_connected(int n, std::uint64_t mask)
    {
        if (n <= 1)
            return true;
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v) {
                if (!(frontier >> v & 1))
                    continue;
                for (int u = 0; u < n; ++u)
                    if (u != v && (mask >> (u < v ? pair_bit(u, v) : pair_bit(v, u)) & 1))
                        next |= 1u << u;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (1u << n) - 1;
    }
}

Graph graph_from_mask(int n, std::uint64_t mask)
{
    check_order(n);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1)
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::uint64_t mask_of(const Graph & g)
{
    check_order(g.order());
    std::uint64_t mask = 0;
    for (auto [a, b] : g.edges())
        mask |= std::uint64_t{1} << pair_bit(a, b);
    return mask;
}

int mask_min_degree(int n, std::uint64_t mask)
{
    int best = n;
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && (mask >> (u < v ? pair_bit(u, v) : pair_bit(v, u)) & 1))
                ++d;
        best = std::min(best, d);
    }
    return n == 0 ? 0 : best;
}

void for_each_graph_mask(int n, const std::function<void(std::uint64_t)> & visit)
{
    check_order(n);
    if (pair_count(n) > 30)
        throw CapExceeded("exhaustive enumeration is limited to 8 vertices");
    const std::uint64_t limit = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        visit(mask);
}

std::vector<Graph> labeled_graphs(int n, bool connected_only)
{
    if (n > 6)
        throw CapExceeded("labeled_graphs is limited to 6 vertices");
    std::vector<Graph> result;
    for_each_graph_mask(n, [&](std::uint64_t mask) {
        if (!connected_only || mask_connected(n, mask))
            result.push_back(graph_from_mask(n, mask));
    });
    return result;
}

std::uint64_t canonical_mask(const Graph & g)
{
    const int n = g.order();
    check_order(n);
    std::vector<Vertex> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Classes of equal degree occupy contiguous slot ranges; permute each.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(slots[j]) == g.degree(slots[i]))
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    for (auto [b, e] : classes)
        std::sort(slots.begin() + b, slots.begin() + e);

    std::uint64_t best = ~std::uint64_t{0};
    for (;;) {
        std::uint64_t mask = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g.adjacent(slots[i], slots[j]))
                    mask |= std::uint64_t{1} << pair_bit(i, j);
        best = std::min(best, mask);

        // Odometer over per-class permutations.
        std::size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [b, e] = classes[c];
            if (std::next_permutation(slots.begin() + b, slots.begin() + e))
                break;
        }
        if (c == classes.size())
            break;
    }
    return n == 0 ? 0 : best;
}

std::vector<Graph> nonisomorphic_graphs(int n, const std::function<bool(int, std::uint64_t)> & keep)
{
    std::map<std::uint64_t, Graph> classes;
    for_each_graph_mask(n, [&](std::uint64_t mask) {
        if (keep && !keep(n, mask))
            return;
        Graph g = graph_from_mask(n, mask);
        std::uint64_t canon = canonical_mask(g);
        if (!classes.contains(canon))
            classes.emplace(canon, graph_from_mask(n, canon));
    });
    std::vector<Graph> result;
    result.reserve(classes.size());
    for (auto & [canon, g] : classes)
        result.push_back(std::move(g));
    return result;
}

std::vector<Graph> connected_graphs(int n)
{
    return nonisomorphic_graphs(n, [](int order, std::uint64_t mask) { return mask_connected(order, mask); });
}

Graph random_connected_graph(int n, int min_degree, std::mt19937_64 & rng, long max_attempts)
{
    check_order(n);
    if (n < 1)
        throw PreconditionError("random graphs need at least one vertex");
    if (min_degree > n - 1)
        throw PreconditionError("minimum degree " + std::to_string(min_degree) + " is impossible on " +
                std::to_string(n) + " vertices");
    const std::uint64_t keep = pair_count(n) == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pair_count(n)) - 1;
    for (long attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t mask = rng() & keep;
        if (mask_min_degree(n, mask) >= min_degree && mask_connected(n, mask))
            return graph_from_mask(n, mask);
    }
    throw Error("random graph rejection sampling gave up after " + std::to_string(max_attempts) + " attempts");
}

} // namespace pebbling
