#include "pebbling/distribution.hpp"

#include "pebbling/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace pebbling {

Distribution::Distribution(int order)
{
    if (order < 0)
        throw PreconditionError("distribution order must be non-negative");
    counts_.assign(order, 0);
}

Distribution::Distribution(std::vector<Count> counts) :
    counts_(std::move(counts))
{
    for (Count c : counts_)
        if (c < 0)
            throw PreconditionError("negative pebble count");
}

Distribution Distribution::from_pairs(int order, std::span<const std::pair<Vertex, Count>> pairs)
{
    Distribution d(order);
    for (auto [v, c] : pairs) {
        if (v < 0 || v >= order)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        d.add(v, c);
    }
    return d;
}

void Distribution::set(Vertex v, Count c)
{
    if (c < 0)
        throw PreconditionError("negative pebble count");
    counts_.at(v) = c;
}

void Distribution::add(Vertex v, Count delta)
{
    Count & slot = counts_.at(v);
    if (slot + delta < 0)
        throw PreconditionError("pebble count would become negative at vertex " + std::to_string(v));
    slot += delta;
}

Count Distribution::total() const noexcept
{
    return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

Count Distribution::max_count() const noexcept
{
    return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::vector<Vertex> Distribution::support() const
{
    std::vector<Vertex> result;
    for (Vertex v = 0; v < order(); ++v)
        if (counts_[v] > 0)
            result.push_back(v);
    return result;
}

std::string Distribution::to_string() const
{
    std::string out;
    for (Vertex v = 0; v < order(); ++v) {
        if (counts_[v] == 0)
            continue;
        if (!out.empty())
            out += ',';
        out += std::to_string(v) + ':' + std::to_string(counts_[v]);
    }
    return out;
}

Distribution parse_distribution(int order, std::string_view text)
{
    Distribution d(order);
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    auto number = [](std::string_view s, int & out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };

    text = trim(text);
    if (text.empty())
        return d;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = trim(text.substr(pos, comma - pos));
        pos = comma + 1;

        auto colon = item.find(':');
        int v = 0, c = 0;
        if (colon == std::string_view::npos || !number(trim(item.substr(0, colon)), v)
                || !number(trim(item.substr(colon + 1)), c))
            throw FormatError("malformed distribution entry '" + std::string(item) + "', expected v:count");
        if (c < 0)
            throw FormatError("negative count in '" + std::string(item) + "'");
        if (v < 0 || v >= order)
            throw PreconditionError("distribution vertex " + std::to_string(v) + " out of range");
        d.add(v, c);
    }
    return d;
}

std::string to_string(const Move & m)
{
    return std::to_string(m.from) + "->" + std::to_string(m.to);
}

std::string to_string(std::span<const Move> sequence)
{
    std::string out;
    for (const auto & m : sequence) {
        if (!out.empty())
            out += ' ';
        out += to_string(m);
    }
    return out;
}

} // namespace pebbling
