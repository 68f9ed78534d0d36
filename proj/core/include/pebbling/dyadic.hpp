#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pebbling {

/// Exact non-negative rational with a power-of-two denominator,
/// numerator / 2^exponent, kept in lowest terms.
class Dyadic
{
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(std::int64_t integer) : numerator_(integer) {}

    /// Requires 0 <= exponent <= 62.
    static Dyadic fraction(std::int64_t numerator, int exponent);

    std::int64_t numerator() const noexcept { return numerator_; }
    int exponent() const noexcept { return exponent_; }

    friend Dyadic operator+(const Dyadic & a, const Dyadic & b);
    Dyadic & operator+=(const Dyadic & other) { return *this = *this + other; }

    friend std::strong_ordering operator<=>(const Dyadic & a, const Dyadic & b);
    friend bool operator==(const Dyadic & a, const Dyadic & b) = default;

    double to_double() const;

    /// "3/4", "1", "5/2".
    std::string to_string() const;

private:
    void normalize();

    std::int64_t numerator_ = 0;
    int exponent_ = 0;
};

} // namespace pebbling
