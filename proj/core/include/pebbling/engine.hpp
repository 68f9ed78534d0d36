#pragma once

#include "pebbling/distribution.hpp"
#include "pebbling/dyadic.hpp"
#include "pebbling/graph.hpp"

#include <optional>
#include <span>

namespace pebbling {

struct ReachOptions
{
    /// Discard search states whose weight at the target is below the
    /// required pebble count. Sound, so toggling it never changes answers.
    bool weight_pruning = true;
};

/// Throws PreconditionError if the move is not an edge or `from` holds
/// fewer than two pebbles.
Distribution apply_move(const Graph & g, const Distribution & d, const Move & m);

/// True iff every prefix of `sequence` applies without overdrawing a
/// vertex. Non-edge moves throw PreconditionError.
bool is_executable(const Graph & g, const Distribution & d, std::span<const Move> sequence);

/// Decides whether some executable sequence leaves at least k pebbles on
/// `target`. Returns the sequence found (empty when d already suffices),
/// or nullopt when no sequence exists.
///
/// Exhaustive depth-first search over distribution states; each state is
/// expanded at most once per query.
std::optional<MoveSequence> k_reachable(const Graph & g, const Distribution & d, Vertex target, Count k,
        ReachOptions options = {});

inline bool is_reachable(const Graph & g, const Distribution & d, Vertex target, ReachOptions options = {})
{
    return k_reachable(g, d, target, 1, options).has_value();
}

/// Every vertex is reachable.
bool is_solvable(const Graph & g, const Distribution & d, ReachOptions options = {});

/// W_D(u) = sum over v of D(v) / 2^d(u,v). Throws PreconditionError on a
/// disconnected graph.
Dyadic weight(const Graph & g, const Distribution & d, Vertex u);

/// Same sum, with vertices in other components contributing nothing.
Dyadic component_weight(const Graph & g, const Distribution & d, Vertex u);

/// Relocates every lone pebble sitting on a vertex that is not 2-reachable
/// onto a neighbour, until every loaded vertex is 2-reachable. The result
/// is solvable and has the same size. Requires a connected graph with at
/// least two vertices and a solvable input (PreconditionError otherwise).
///
/// The vertex handled next is the lowest-indexed offender; its pebble goes
/// to the lowest-indexed neighbour reachable without that pebble, falling
/// back to the lowest-indexed neighbour.
Distribution normalize_optimal(const Graph & g, const Distribution & d);

/// Vertices that are not 2-reachable but hold a pebble.
std::vector<Vertex> lone_unmovable_vertices(const Graph & g, const Distribution & d);

} // namespace pebbling
