#include "pebbling/dyadic.hpp"

#include "pebbling/error.hpp"

#include <cmath>

namespace pebbling {

namespace
{
    __extension__ typedef __int128 Wide;

    Wide scaled(const Dyadic & x, int exponent)
    {
        return static_cast<Wide>(x.numerator()) << (exponent - x.exponent());
    }
}

Dyadic Dyadic::fraction(std::int64_t numerator, int exponent)
{
    if (exponent < 0 || exponent > 62)
        throw PreconditionError("dyadic exponent out of range");
    Dyadic d;
    d.numerator_ = numerator;
    d.exponent_ = exponent;
    d.normalize();
    return d;
}

void Dyadic::normalize()
{
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    while (exponent_ > 0 && (numerator_ & 1) == 0) {
        numerator_ >>= 1;
        --exponent_;
    }
}

Dyadic operator+(const Dyadic & a, const Dyadic & b)
{
    int e = std::max(a.exponent_, b.exponent_);
    Wide sum = scaled(a, e) + scaled(b, e);
    while (e > 0 && (sum & 1) == 0) {
        sum >>= 1;
        --e;
    }
    if (sum > INT64_MAX || sum < INT64_MIN)
        throw Error("dyadic overflow");
    Dyadic r;
    r.numerator_ = static_cast<std::int64_t>(sum);
    r.exponent_ = e;
    return r;
}

std::strong_ordering operator<=>(const Dyadic & a, const Dyadic & b)
{
    int e = std::max(a.exponent_, b.exponent_);
    Wide x = scaled(a, e), y = scaled(b, e);
    if (x < y)
        return std::strong_ordering::less;
    if (x > y)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Dyadic::to_double() const
{
    return std::ldexp(static_cast<double>(numerator_), -exponent_);
}

std::string Dyadic::to_string() const
{
    if (exponent_ == 0)
        return std::to_string(numerator_);
    return std::to_string(numerator_) + "/" + std::to_string(std::int64_t{1} << exponent_);
}

} // namespace pebbling
