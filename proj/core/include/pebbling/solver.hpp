#pragma once

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pebbling {

struct SolverOptions
{
    /// Skip candidates whose weight falls below 1 somewhere, and prune the
    /// reachability searches the same way.
    bool weight_pruning = true;

    /// Threads used to test candidates of one size. Results do not depend
    /// on this value.
    unsigned workers = 1;
};

/// Exact value of a pebbling parameter with a witness distribution.
///
/// `explored` counts candidates up to and including the witness in
/// enumeration order; `pruned` counts how many of those the weight test
/// rejected without a search. Both are schedule independent.
struct PebblingResult
{
    Count value = 0;
    Distribution witness;
    std::uint64_t explored = 0;
    std::uint64_t pruned = 0;
};

/// ceil(2n/3), the size bound searched up to.
constexpr Count pebbling_upper_bound(int n) { return (2 * n + 2) / 3; }

/// pi*(G). Candidates are enumerated by size, then lexicographically by count
/// vector, so the witness is the lexicographically least optimal
/// distribution. A disconnected graph is solved per component and the
/// witnesses are concatenated.
PebblingResult optimal_pebbling_number(const Graph & g, SolverOptions options = {});

/// pi*_t(G); t = 1 returns |V(G)| directly. Throws PreconditionError when
/// t < 1.
PebblingResult restricted_optimal_pebbling_number(const Graph & g, Count t, SolverOptions options = {});

/// Is pi*(G) <= k?
bool opn_decision(const Graph & g, Count k, SolverOptions options = {});

/// Is pi*_t(G) <= k?
bool ropn_decision(const Graph & g, Count t, Count k, SolverOptions options = {});

/// Lexicographically least solvable distribution with exactly `size`
/// pebbles and at most t per vertex, if any. `t` <= 0 means unrestricted.
std::optional<Distribution> first_solvable_of_size(const Graph & g, Count size, Count t,
        SolverOptions options = {});

/// Value is gamma(G) or gamma_R(G); `labels` is the witness function
/// (0/1 membership for domination, 0/1/2 for Roman domination).
struct DominationResult
{
    int value = 0;
    std::vector<int> labels;
    std::uint64_t explored = 0;
    std::uint64_t pruned = 0;
};

DominationResult domination_number(const Graph & g);
DominationResult roman_domination_number(const Graph & g);

bool is_dominating_set(const Graph & g, std::span<const Vertex> set);

/// Every 0-labelled vertex has a 2-labelled neighbour.
bool is_roman_dominating(const Graph & g, std::span<const int> labels);

/// Some pair {x, y} whose distribution of two pebbles on each is solvable.
std::optional<std::pair<Vertex, Vertex>> two_pile_witness(const Graph & g, SolverOptions options = {});

/// Lexicographically first pair u < v with {u,v} plus their common
/// neighbours dominating the graph.
std::optional<std::pair<Vertex, Vertex>> dominating_pair_witness(const Graph & g);

} // namespace pebbling
