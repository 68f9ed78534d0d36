#pragma once

#include "pebbling/graph.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pebbling {

using Count = int;

/// Pebble counts per vertex. A plain value type: searches copy it freely.
class Distribution
{
public:
    Distribution() = default;

    /// All-zero distribution on `order` vertices.
    explicit Distribution(int order);

    /// Throws PreconditionError on a negative count.
    explicit Distribution(std::vector<Count> counts);

    /// Unlisted vertices hold zero pebbles; repeated vertices accumulate.
    static Distribution from_pairs(int order, std::span<const std::pair<Vertex, Count>> pairs);

    int order() const noexcept { return static_cast<int>(counts_.size()); }
    Count operator[](Vertex v) const { return counts_[v]; }
    const std::vector<Count> & counts() const noexcept { return counts_; }

    void set(Vertex v, Count c);
    void add(Vertex v, Count delta);

    /// |D|, the total number of pebbles.
    Count total() const noexcept;
    Count max_count() const noexcept;

    /// True when no vertex holds more than t pebbles.
    bool is_restricted(Count t) const noexcept { return max_count() <= t; }

    /// Vertices holding at least one pebble, ascending.
    std::vector<Vertex> support() const;

    /// "v:c" pairs for non-zero vertices, comma separated; "" when empty.
    std::string to_string() const;

    /// Lexicographic on the count vectors.
    friend auto operator<=>(const Distribution &, const Distribution &) = default;

private:
    std::vector<Count> counts_;
};

/// Parses "0:2,3:1" (whitespace tolerated, empty string allowed).
/// Throws FormatError on malformed pairs and PreconditionError on labels
/// outside 0..order-1.
Distribution parse_distribution(int order, std::string_view text);

/// One pebbling step: two pebbles leave `from`, one arrives at `to`.
struct Move
{
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Move &, const Move &) = default;
};

using MoveSequence = std::vector<Move>;

std::string to_string(const Move & m);
std::string to_string(std::span<const Move> sequence);

} // namespace pebbling
