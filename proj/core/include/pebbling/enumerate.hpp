#pragma once

#include "pebbling/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace pebbling {

/// Graphs on up to 11 vertices encoded as a bitmask over vertex pairs:
/// pair (i, j), i < j, is bit j*(j-1)/2 + i.
constexpr int max_mask_order = 11;

constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph & g);

/// Minimum vertex degree straight from a mask.
int mask_min_degree(int n, std::uint64_t mask);

/// Calls visit(mask) for all 2^(n(n-1)/2) labelled graphs on n vertices.
void for_each_graph_mask(int n, const std::function<void(std::uint64_t)> & visit);

/// Every labelled graph on n vertices (n <= 6), optionally only the
/// connected ones, in mask order.
std::vector<Graph> labeled_graphs(int n, bool connected_only);

/// Smallest mask over all relabellings that list vertices by non-increasing
/// degree. Equal for two graphs iff they are isomorphic.
std::uint64_t canonical_mask(const Graph & g);

/// One representative per isomorphism class among the graphs on n vertices
/// accepted by `keep` (applied to the mask first, so cheap filters prune
/// before any Graph is built). Ordered by canonical mask.
std::vector<Graph> nonisomorphic_graphs(int n, const std::function<bool(int, std::uint64_t)> & keep = {});

/// Connected isomorphism classes on n vertices.
std::vector<Graph> connected_graphs(int n);

/// Uniform over labelled graphs on n vertices (each pair an edge with
/// probability 1/2) conditioned on connectivity and minimum degree, by
/// rejection. One 64-bit draw per attempt, so sequences are reproducible
/// across platforms. Throws PreconditionError if the constraint is
/// unsatisfiable and Error after `max_attempts` rejections.
Graph random_connected_graph(int n, int min_degree, std::mt19937_64 & rng, long max_attempts = 10'000'000);

} // namespace pebbling
