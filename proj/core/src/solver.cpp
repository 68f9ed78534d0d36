#include "pebbling/solver.hpp"

#include "pebbling/engine.hpp"
#include "pebbling/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

namespace pebbling {

namespace
{
    constexpr Count unrestricted = std::numeric_limits<Count>::max();
    constexpr std::size_t batch_size = 4096;

    // Advances `c` to the next count vector (lexicographic order) with the
    // same sum and every entry <= cap. Returns false after the last one.
    bool next_composition(std::vector<Count> & c, Count cap)
    {
        const int n = static_cast<int>(c.size());
        // Find the rightmost position i < n-1 that can grow by one while the
        // suffix after it can still absorb the remaining pebbles.
        Count suffix = c[n - 1];
        for (int i = n - 2; i >= 0; --i) {
            if (c[i] < cap && suffix >= 1) {
                c[i] += 1;
                Count rest = suffix - 1;
                // Fill positions i+1..n-1 with the lexicographically least
                // arrangement: push everything as far right as possible.
                for (int j = n - 1; j > i; --j) {
                    Count put = std::min(rest, cap);
                    c[j] = put;
                    rest -= put;
                }
                return true;
            }
            suffix += c[i];
        }
        return false;
    }

    // Lexicographically least vector of the given sum, or false if none.
    bool first_composition(std::vector<Count> & c, Count sum, Count cap)
    {
        const int n = static_cast<int>(c.size());
        if (static_cast<long long>(cap) * n < sum)
            return false;
        Count rest = sum;
        for (int j = n - 1; j >= 0; --j) {
            Count put = std::min(rest, cap);
            c[j] = put;
            rest -= put;
        }
        return true;
    }

    struct WeightTable
    {
        int exponent = 0;
        std::vector<std::int64_t> units; // n x n

        explicit WeightTable(const Graph & g)
        {
            const int n = g.order();
            exponent = g.distances().max_finite();
            units.assign(static_cast<std::size_t>(n) * n, 0);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = 0; v < n; ++v) {
                    int d = g.distance(u, v);
                    if (d != DistanceMatrix::infinite)
                        units[static_cast<std::size_t>(u) * n + v] = std::int64_t{1} << (exponent - d);
                }
        }

        bool passes(std::span<const Count> counts) const
        {
            const std::size_t n = counts.size();
            const std::int64_t one = std::int64_t{1} << exponent;
            for (std::size_t u = 0; u < n; ++u) {
                std::int64_t w = 0;
                const std::int64_t * row = units.data() + u * n;
                for (std::size_t v = 0; v < n; ++v)
                    w += row[v] * counts[v];
                if (w < one)
                    return false;
            }
            return true;
        }
    };

    enum class Outcome : std::uint8_t { untested, pruned, unsolvable, solvable };

    struct SizeSearch
    {
        std::optional<Distribution> witness;
        std::uint64_t explored = 0;
        std::uint64_t pruned = 0;
    };

    // Tests every distribution of exactly `size` pebbles (at most `cap` per
    // vertex) in lexicographic order and stops at the first solvable one.
    SizeSearch search_size(const Graph & g, Count size, Count cap, const SolverOptions & options)
    {
        SizeSearch result;
        const int n = g.order();
        std::vector<Count> current(n, 0);
        if (!first_composition(current, size, cap))
            return result;

        std::optional<WeightTable> weights;
        if (options.weight_pruning)
            weights.emplace(g);
        const ReachOptions reach{options.weight_pruning};
        const unsigned workers = std::max(1u, options.workers);

        std::vector<std::vector<Count>> batch;
        std::vector<Outcome> outcome;
        bool more = true;
        while (more) {
            batch.clear();
            while (more && batch.size() < batch_size) {
                batch.push_back(current);
                more = next_composition(current, cap);
            }
            outcome.assign(batch.size(), Outcome::untested);
            std::atomic<std::size_t> best{batch.size()};

            auto work = [&](unsigned worker) {
                for (std::size_t i = worker; i < batch.size(); i += workers) {
                    if (i > best.load(std::memory_order_relaxed))
                        break;
                    if (weights && !weights->passes(batch[i])) {
                        outcome[i] = Outcome::pruned;
                        continue;
                    }
                    if (is_solvable(g, Distribution(batch[i]), reach)) {
                        outcome[i] = Outcome::solvable;
                        std::size_t seen = best.load();
                        while (i < seen && !best.compare_exchange_weak(seen, i)) {
                        }
                        break;
                    }
                    outcome[i] = Outcome::unsolvable;
                }
            };
            if (workers == 1)
                work(0);
            else {
                std::vector<std::jthread> pool;
                for (unsigned w = 0; w < workers; ++w)
                    pool.emplace_back(work, w);
            }

            std::size_t stop = std::min(best.load(), batch.size() - 1);
            for (std::size_t i = 0; i <= stop; ++i) {
                ++result.explored;
                if (outcome[i] == Outcome::pruned)
                    ++result.pruned;
            }
            if (best.load() < batch.size()) {
                result.witness = Distribution(batch[best.load()]);
                return result;
            }
        }
        return result;
    }

    PebblingResult solve_connected(const Graph & g, Count cap, const SolverOptions & options)
    {
        const int n = g.order();
        PebblingResult result;
        const Count bound = pebbling_upper_bound(n);
        for (Count size = 1; size <= bound; ++size) {
            SizeSearch s = search_size(g, size, cap, options);
            result.explored += s.explored;
            result.pruned += s.pruned;
            if (s.witness) {
                result.value = size;
                result.witness = std::move(*s.witness);
                return result;
            }
        }
        throw Error("no solvable distribution within ceil(2n/3) = " + std::to_string(bound) +
                " pebbles on a connected graph of order " + std::to_string(n));
    }

    PebblingResult solve(const Graph & g, Count cap, const SolverOptions & options)
    {
        if (g.order() < 1)
            throw PreconditionError("the solver needs a non-empty graph");
        if (is_connected(g))
            return solve_connected(g, cap, options);

        PebblingResult total;
        total.witness = Distribution(g.order());
        for (const auto & component : connected_components(g)) {
            Graph sub = induced_subgraph(g, component);
            PebblingResult part = solve_connected(sub, cap, options);
            total.value += part.value;
            total.explored += part.explored;
            total.pruned += part.pruned;
            for (std::size_t i = 0; i < component.size(); ++i)
                total.witness.set(component[i], part.witness[static_cast<Vertex>(i)]);
        }
        return total;
    }

    void require_mask_size(const Graph & g)
    {
        if (g.order() < 1)
            throw PreconditionError("domination needs a non-empty graph");
        if (g.order() > 63)
            throw CapExceeded("domination search supports at most 63 vertices");
    }

    std::vector<std::uint64_t> closed_neighborhoods(const Graph & g)
    {
        std::vector<std::uint64_t> masks(g.order(), 0);
        for (Vertex v = 0; v < g.order(); ++v) {
            masks[v] = std::uint64_t{1} << v;
            for (Vertex u : g.neighbors(v))
                masks[v] |= std::uint64_t{1} << u;
        }
        return masks;
    }

    // Calls visit(combination) for every k-subset of 0..n-1 in lexicographic
    // order until visit returns true.
    template <typename Visit>
    bool for_each_combination(int n, int k, Visit && visit)
    {
        std::vector<Vertex> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        if (k > n)
            return false;
        for (;;) {
            if (visit(std::span<const Vertex>(idx)))
                return true;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                return false;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
}

PebblingResult optimal_pebbling_number(const Graph & g, SolverOptions options)
{
    return solve(g, unrestricted, options);
}

PebblingResult restricted_optimal_pebbling_number(const Graph & g, Count t, SolverOptions options)
{
    if (t < 1)
        throw PreconditionError("restriction t must be at least 1");
    if (g.order() < 1)
        throw PreconditionError("the solver needs a non-empty graph");
    if (t == 1) {
        PebblingResult result;
        result.value = g.order();
        result.witness = Distribution(std::vector<Count>(g.order(), 1));
        return result;
    }
    return solve(g, t, options);
}

bool opn_decision(const Graph & g, Count k, SolverOptions options)
{
    return optimal_pebbling_number(g, options).value <= k;
}

bool ropn_decision(const Graph & g, Count t, Count k, SolverOptions options)
{
    return restricted_optimal_pebbling_number(g, t, options).value <= k;
}

std::optional<Distribution> first_solvable_of_size(const Graph & g, Count size, Count t, SolverOptions options)
{
    if (size < 0)
        throw PreconditionError("size must be non-negative");
    if (g.order() < 1)
        return std::nullopt;
    return search_size(g, size, t <= 0 ? unrestricted : t, options).witness;
}

bool is_dominating_set(const Graph & g, std::span<const Vertex> set)
{
    std::vector<bool> dominated(g.order(), false);
    for (Vertex v : set) {
        dominated.at(v) = true;
        for (Vertex u : g.neighbors(v))
            dominated[u] = true;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
}

bool is_roman_dominating(const Graph & g, std::span<const int> labels)
{
    if (static_cast<int>(labels.size()) != g.order())
        throw PreconditionError("label count does not match graph order");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (labels[v] < 0 || labels[v] > 2)
            return false;
        if (labels[v] != 0)
            continue;
        auto nbrs = g.neighbors(v);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return labels[u] == 2; }))
            return false;
    }
    return true;
}

DominationResult domination_number(const Graph & g)
{
    require_mask_size(g);
    const int n = g.order();
    const auto closed = closed_neighborhoods(g);
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    // Greedy upper bound: repeatedly take the vertex dominating the most
    // undominated vertices.
    int upper = 0;
    for (std::uint64_t covered = 0; covered != all; ++upper) {
        Vertex best = 0;
        int gain = -1;
        for (Vertex v = 0; v < n; ++v) {
            int c = std::popcount(closed[v] & ~covered);
            if (c > gain) {
                gain = c;
                best = v;
            }
        }
        covered |= closed[best];
    }
    // Each vertex dominates at most Delta + 1 vertices.
    const int lower = (n + max_degree(g)) / (max_degree(g) + 1);

    DominationResult result;
    for (int k = lower; k <= upper; ++k) {
        std::vector<Vertex> found;
        bool ok = for_each_combination(n, k, [&](std::span<const Vertex> set) {
            ++result.explored;
            std::uint64_t covered = 0;
            for (Vertex v : set)
                covered |= closed[v];
            if (covered != all)
                return false;
            found.assign(set.begin(), set.end());
            return true;
        });
        if (ok) {
            result.value = k;
            result.labels.assign(n, 0);
            for (Vertex v : found)
                result.labels[v] = 1;
            return result;
        }
    }
    throw Error("domination search exceeded its greedy bound");
}

DominationResult roman_domination_number(const Graph & g)
{
    require_mask_size(g);
    const int n = g.order();
    const auto closed = closed_neighborhoods(g);

    // For a fixed set S of 2-labelled vertices the cheapest Roman function
    // labels every vertex outside N[S] with 1, so
    // gamma_R = min over S of 2|S| + |V \ N[S]|.
    DominationResult result;
    result.value = n;
    std::vector<Vertex> best_set;
    for (int s = 1; 2 * s < result.value && s <= n; ++s) {
        for_each_combination(n, s, [&](std::span<const Vertex> set) {
            ++result.explored;
            std::uint64_t covered = 0;
            for (Vertex v : set)
                covered |= closed[v];
            int cost = 2 * s + (n - std::popcount(covered));
            if (cost < result.value) {
                result.value = cost;
                best_set.assign(set.begin(), set.end());
            }
            return 2 * s >= result.value;
        });
    }
    result.labels.assign(n, 1);
    std::uint64_t covered = 0;
    for (Vertex v : best_set)
        covered |= closed[v];
    for (Vertex v = 0; v < n; ++v)
        if (covered >> v & 1)
            result.labels[v] = 0;
    for (Vertex v : best_set)
        result.labels[v] = 2;
    return result;
}

std::optional<std::pair<Vertex, Vertex>> two_pile_witness(const Graph & g, SolverOptions options)
{
    const ReachOptions reach{options.weight_pruning};
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y) {
            Distribution d(g.order());
            d.set(x, 2);
            d.set(y, 2);
            if (is_solvable(g, d, reach))
                return std::pair{x, y};
        }
    return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> dominating_pair_witness(const Graph & g)
{
    require_mask_size(g);
    const int n = g.order();
    const auto closed = closed_neighborhoods(g);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            std::uint64_t open_u = closed[u] & ~(std::uint64_t{1} << u);
            std::uint64_t open_v = closed[v] & ~(std::uint64_t{1} << v);
            std::uint64_t set = (std::uint64_t{1} << u) | (std::uint64_t{1} << v) | (open_u & open_v);
            std::uint64_t covered = 0;
            for (Vertex x = 0; x < n; ++x)
                if (set >> x & 1)
                    covered |= closed[x];
            if (covered == all)
                return std::pair{u, v};
        }
    return std::nullopt;
}

} // namespace pebbling
