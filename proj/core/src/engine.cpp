#include "pebbling/engine.hpp"

#include "pebbling/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace pebbling {

namespace
{
    // Weights are compared as integers scaled by 2^exponent, where the
    // exponent is the largest finite distance in the graph.
    constexpr int max_weight_exponent = 48;

    int weight_exponent(const Graph & g)
    {
        int e = g.distances().max_finite();
        if (e > max_weight_exponent)
            throw PreconditionError("graph diameter too large for exact weights");
        return e;
    }

    std::vector<std::int64_t> unit_weights(const Graph & g, Vertex u, int exponent)
    {
        std::vector<std::int64_t> unit(g.order(), 0);
        for (Vertex v = 0; v < g.order(); ++v) {
            int d = g.distance(u, v);
            if (d != DistanceMatrix::infinite)
                unit[v] = std::int64_t{1} << (exponent - d);
        }
        return unit;
    }

    std::int64_t scaled_weight(const std::vector<std::int64_t> & unit, std::span<const Count> counts)
    {
        std::int64_t w = 0;
        for (std::size_t v = 0; v < counts.size(); ++v)
            w += unit[v] * counts[v];
        return w;
    }

    void check_distribution(const Graph & g, const Distribution & d)
    {
        if (d.order() != g.order())
            throw PreconditionError("distribution order " + std::to_string(d.order()) +
                    " does not match graph order " + std::to_string(g.order()));
    }

    void check_move(const Graph & g, const Move & m)
    {
        if (!g.contains(m.from) || !g.contains(m.to) || !g.adjacent(m.from, m.to))
            throw PreconditionError("move " + to_string(m) + " is not along an edge");
    }

    std::string state_key(std::span<const Count> counts)
    {
        std::string key(counts.size(), '\0');
        for (std::size_t i = 0; i < counts.size(); ++i)
            key[i] = static_cast<char>(std::min<Count>(counts[i], 255));
        return key;
    }

    class ReachSearch
    {
    public:
        ReachSearch(const Graph & g, const Distribution & d, Vertex target, Count k, bool prune,
                std::vector<char> * covered) :
            g_(g),
            target_(target),
            k_(k),
            prune_(prune),
            covered_(covered),
            state_(d.counts())
        {
            if (prune_) {
                int e = weight_exponent(g);
                unit_ = unit_weights(g, target, e);
                need_ = static_cast<std::int64_t>(k) << e;
                weight_ = scaled_weight(unit_, state_);
            }
        }

        bool run() { return dfs(); }

        MoveSequence take_path() { return std::move(path_); }

    private:
        bool dfs()
        {
            if (state_[target_] >= k_)
                return true;
            if (prune_ && weight_ < need_)
                return false;
            if (!visited_.insert(state_key(state_)).second)
                return false;
            if (covered_)
                for (std::size_t v = 0; v < state_.size(); ++v)
                    if (state_[v] > 0)
                        (*covered_)[v] = 1;

            const int n = g_.order();
            for (Vertex u = 0; u < n; ++u) {
                if (state_[u] < 2)
                    continue;
                for (Vertex x : g_.neighbors(u)) {
                    state_[u] -= 2;
                    state_[x] += 1;
                    std::int64_t saved = weight_;
                    if (prune_)
                        weight_ += unit_[x] - 2 * unit_[u];
                    path_.push_back({u, x});
                    if (dfs())
                        return true;
                    path_.pop_back();
                    weight_ = saved;
                    state_[u] += 2;
                    state_[x] -= 1;
                }
            }
            return false;
        }

        const Graph & g_;
        Vertex target_;
        Count k_;
        bool prune_;
        std::vector<char> * covered_;
        std::vector<Count> state_;
        std::vector<std::int64_t> unit_;
        std::int64_t need_ = 0;
        std::int64_t weight_ = 0;
        std::unordered_set<std::string> visited_;
        MoveSequence path_;
    };
}

Distribution apply_move(const Graph & g, const Distribution & d, const Move & m)
{
    check_distribution(g, d);
    check_move(g, m);
    if (d[m.from] < 2)
        throw PreconditionError("move " + to_string(m) + " needs two pebbles at vertex " +
                std::to_string(m.from) + ", found " + std::to_string(d[m.from]));
    Distribution result = d;
    result.add(m.from, -2);
    result.add(m.to, 1);
    return result;
}

bool is_executable(const Graph & g, const Distribution & d, std::span<const Move> sequence)
{
    check_distribution(g, d);
    std::vector<Count> counts = d.counts();
    for (const auto & m : sequence) {
        check_move(g, m);
        if (counts[m.from] < 2)
            return false;
        counts[m.from] -= 2;
        counts[m.to] += 1;
    }
    return true;
}

std::optional<MoveSequence> k_reachable(const Graph & g, const Distribution & d, Vertex target, Count k,
        ReachOptions options)
{
    check_distribution(g, d);
    if (!g.contains(target))
        throw PreconditionError("target vertex " + std::to_string(target) + " out of range");
    if (k < 1)
        throw PreconditionError("k must be at least 1");
    ReachSearch search(g, d, target, k, options.weight_pruning, nullptr);
    if (!search.run())
        return std::nullopt;
    return search.take_path();
}

bool is_solvable(const Graph & g, const Distribution & d, ReachOptions options)
{
    check_distribution(g, d);
    const int n = g.order();
    if (options.weight_pruning) {
        int e = weight_exponent(g);
        for (Vertex u = 0; u < n; ++u)
            if (scaled_weight(unit_weights(g, u, e), d.counts()) < (std::int64_t{1} << e))
                return false;
    }

    std::vector<char> covered(n, 0);
    for (Vertex v = 0; v < n; ++v)
        covered[v] = d[v] > 0;
    for (Vertex v = 0; v < n; ++v) {
        if (covered[v])
            continue;
        ReachSearch search(g, d, v, 1, options.weight_pruning, &covered);
        if (!search.run())
            return false;
        covered[v] = 1;
    }
    return true;
}

Dyadic weight(const Graph & g, const Distribution & d, Vertex u)
{
    if (!is_connected(g))
        throw PreconditionError("weight requires a connected graph");
    return component_weight(g, d, u);
}

Dyadic component_weight(const Graph & g, const Distribution & d, Vertex u)
{
    check_distribution(g, d);
    if (!g.contains(u))
        throw PreconditionError("vertex " + std::to_string(u) + " out of range");
    int e = weight_exponent(g);
    return Dyadic::fraction(scaled_weight(unit_weights(g, u, e), d.counts()), e);
}

std::vector<Vertex> lone_unmovable_vertices(const Graph & g, const Distribution & d)
{
    std::vector<Vertex> result;
    for (Vertex v = 0; v < g.order(); ++v)
        if (d[v] > 0 && !k_reachable(g, d, v, 2))
            result.push_back(v);
    return result;
}

Distribution normalize_optimal(const Graph & g, const Distribution & d)
{
    check_distribution(g, d);
    if (g.order() < 2)
        throw PreconditionError("normalize_optimal requires at least two vertices");
    if (!is_connected(g))
        throw PreconditionError("normalize_optimal requires a connected graph");
    if (!is_solvable(g, d))
        throw PreconditionError("normalize_optimal requires a solvable distribution");

    Distribution current = d;
    for (;;) {
        auto offenders = lone_unmovable_vertices(g, current);
        if (offenders.empty())
            return current;
        Vertex v = offenders.front();

        Distribution without = current;
        without.add(v, -1);
        auto nbrs = g.neighbors(v);
        Vertex chosen = nbrs.front();
        for (Vertex u : nbrs)
            if (is_reachable(g, without, u)) {
                chosen = u;
                break;
            }

        Distribution next = without;
        next.add(chosen, 1);
        // The relocated pebble was never movable, so everything reachable
        // before stays reachable and v is now fed through `chosen`.
        if (!is_solvable(g, next))
            throw Error("normalize_optimal: relocation lost solvability");
        current = std::move(next);
    }
}

} // namespace pebbling
