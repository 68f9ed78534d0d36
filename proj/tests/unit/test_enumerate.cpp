#include "pebbling/constructions.hpp"
#include "pebbling/enumerate.hpp"
#include "pebbling/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace pebbling;

TEST(Masks, RoundTrip)
{
    Graph h = h_family(4);
    EXPECT_EQ(graph_from_mask(9, mask_of(h)), h);
    EXPECT_EQ(pair_bit(0, 1), 0);
    EXPECT_EQ(pair_bit(1, 2), 2);
    EXPECT_EQ(mask_min_degree(4, mask_of(cycle_graph(4))), 2);
    EXPECT_THROW(graph_from_mask(12, 0), PreconditionError);
}

TEST(Enumerate, LabeledCounts)
{
    // Connected labelled graphs: 1, 1, 4, 38, 728.
    const std::size_t connected[] = {1, 1, 4, 38, 728};
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(labeled_graphs(n, true).size(), connected[n - 1]);
        EXPECT_EQ(labeled_graphs(n, false).size(), std::size_t{1} << pair_count(n));
    }
}

TEST(Enumerate, IsomorphismClassCounts)
{
    const std::size_t all[] = {1, 2, 4, 11, 34, 156};
    const std::size_t connected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(nonisomorphic_graphs(n).size(), all[n - 1]) << n;
        EXPECT_EQ(connected_graphs(n).size(), connected[n - 1]) << n;
    }
}

TEST(Enumerate, CanonicalFormIgnoresLabels)
{
    Graph h = h_family(4);
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t canon = canonical_mask(h);
    for (int trial = 0; trial < 20; ++trial) {
        std::next_permutation(perm.begin() + 2, perm.end());
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        std::vector<Edge> edges;
        for (auto [a, b] : h.edges())
            edges.emplace_back(perm[a], perm[b]);
        EXPECT_EQ(canonical_mask(Graph(9, edges)), canon);
    }
    EXPECT_NE(canonical_mask(path_graph(4)), canonical_mask(star_graph(3)));
}

TEST(RandomGraphs, SeededAndConstrained)
{
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        int n = 2 + i % 8;
        Graph x = random_connected_graph(n, (n + 1) / 2, a);
        Graph y = random_connected_graph(n, (n + 1) / 2, b);
        EXPECT_EQ(x, y);
        EXPECT_TRUE(is_connected(x));
        EXPECT_GE(min_degree(x), (n + 1) / 2);
    }
    std::mt19937_64 r(1);
    EXPECT_EQ(random_connected_graph(2, 1, r), complete_graph(2));
    EXPECT_THROW(random_connected_graph(3, 3, r), PreconditionError);
    EXPECT_THROW(random_connected_graph(1, 1, r), PreconditionError);
}

TEST(RandomGraphs, CoverManyClasses)
{
    std::mt19937_64 rng(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 300; ++i)
        seen.insert(canonical_mask(random_connected_graph(5, 1, rng)));
    EXPECT_GT(seen.size(), 15u);
}
