#pragma once

#include <optional>
#include <string>

#include "conic/rational.hpp"

namespace conic {

/// A rational or +infinity.
struct ExtendedReal
{
    std::optional<Rational> value; // empty means +infinity

    static ExtendedReal finite(Rational v) { return ExtendedReal{std::move(v)}; }
    static ExtendedReal infinity() { return ExtendedReal{std::nullopt}; }

    bool is_infinite() const { return !value.has_value(); }

    bool operator==(const ExtendedReal& o) const { return value == o.value; }
};

inline std::string to_string(const ExtendedReal& x)
{
    return x.is_infinite() ? std::string("+inf") : to_display_string(*x.value);
}

inline ExtendedReal max(const ExtendedReal& a, const ExtendedReal& b)
{
    if (a.is_infinite() || b.is_infinite())
        return ExtendedReal::infinity();
    return ExtendedReal::finite(std::max(*a.value, *b.value));
}

} // namespace conic
