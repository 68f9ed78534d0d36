#pragma once

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"

#include <utility>
#include <vector>

namespace pebbling {

Graph complete_graph(int m);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph & a, const Graph & b);

/// Flat labelling of G·H: (g, h) <-> g * |V(H)| + h, so the fibre of g is
/// the contiguous range [g * |V(H)|, (g + 1) * |V(H)|).
class ProductLabeling
{
public:
    ProductLabeling(int outer_order, int inner_order) :
        outer_(outer_order),
        inner_(inner_order)
    {
    }

    int outer_order() const noexcept { return outer_; }
    int inner_order() const noexcept { return inner_; }
    int order() const noexcept { return outer_ * inner_; }

    Vertex flat(Vertex g, Vertex h) const { return g * inner_ + h; }
    std::pair<Vertex, Vertex> pair(Vertex flat) const { return {flat / inner_, flat % inner_}; }

private:
    int outer_;
    int inner_;
};

struct ProductGraph
{
    Graph graph;
    ProductLabeling labeling;
};

/// Lexicographic product: (g1,h1) ~ (g2,h2) iff g1 ~ g2, or g1 = g2 and
/// h1 ~ h2.
ProductGraph lexicographic_product(const Graph & g, const Graph & h);

/// H_m for even m >= 4: two copies of K_m on u_1..u_m and v_1..v_m with the
/// edges {x_i, x_{i+1}} (i odd) removed, a hub w joined to every odd-indexed
/// u_i and v_i, and cross edges {u_i, v_i} for even i.
///
/// Labels: u_i -> i-1, v_i -> m+i-1, w -> 2m.
Graph h_family(int m);

/// 1-based H_m vertex names, indices taken mod m with m+1 wrapping to 1.
struct HFamilyLabels
{
    int m;

    Vertex u(int i) const { return wrap(i) - 1; }
    Vertex v(int i) const { return m + wrap(i) - 1; }
    Vertex w() const { return 2 * m; }

    int wrap(int i) const { return ((i - 1) % m + m) % m + 1; }
};

/// Total map from source vertices to target labels 0..target_order-1.
class VertexMap
{
public:
    /// Throws PreconditionError if some image is outside the target range.
    VertexMap(int target_order, std::vector<Vertex> images);

    static VertexMap identity(int order);

    int source_order() const noexcept { return static_cast<int>(images_.size()); }
    int target_order() const noexcept { return target_order_; }
    Vertex operator()(Vertex v) const { return images_.at(v); }
    const std::vector<Vertex> & images() const noexcept { return images_; }

    bool is_surjective() const;

private:
    int target_order_;
    std::vector<Vertex> images_;
};

/// Parses one target label per source vertex, whitespace separated, with an
/// optional leading "n <target_order>" line ('#' comments allowed). Without
/// the header the target order is 1 + the largest label.
VertexMap parse_vertex_map(std::string_view text);

struct Quotient
{
    Graph graph;
    Distribution distribution;
};

/// Quotient of g under phi with the collapsed distribution. Edges inside a
/// fibre vanish. Throws PreconditionError unless phi is surjective and its
/// source order matches g.
Quotient collapse(const Graph & g, const VertexMap & phi, const Distribution & d);

/// G -> G·K_n for connected G on n >= 2 vertices.
ProductGraph opn_to_ropn_reduction(const Graph & g);

/// Lifts a normalized solvable distribution D on G to a 2-restricted
/// distribution of the same size on G·K_m: a fibre keeps an odd leftover
/// pebble at copy 0 and pairs of pebbles at copies 1, 2, ...; when all 2m
/// pebbles sit on one vertex every copy of it gets two.
///
/// Requires m >= ceil(n/3), D solvable, and every loaded vertex of D
/// 2-reachable; PreconditionError otherwise.
Distribution product_witness(const Graph & g, const Distribution & d, int m);

/// Fibre sums of a distribution on G·H, i.e. collapsing onto G.
Distribution fibre_sums(const ProductLabeling & labeling, const Distribution & q);

} // namespace pebbling
