#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "conic/error.hpp"

namespace conic {

struct SocProjection
{
    std::vector<double> projection;
    double distance = 0.0;
};

/**
 * Euclidean projection onto the second-order cone {(w, z) : z >= ||w||_2},
 * with z the last coordinate.
 *
 * Three regimes: p inside the cone is returned as is; p in the polar cone
 * (||w|| <= -z) projects to the origin; otherwise the projection is
 * ((z + ||w||)/2) * (w/||w||, 1).
 *
 * In the third regime the distance is evaluated as (||w|| - z)/sqrt(2), which
 * avoids subtracting the two nearly equal points; intermediate sums run in
 * long double, so the distance has relative error at most a few ulps of
 * double (well under 1e-12) for inputs that do not overflow.
 */
inline SocProjection soc_project(const std::vector<double>& p)
{
    if (p.size() < 2)
        throw MalformedInput("soc_project: dimension must be at least 2");
    const std::size_t k = p.size() - 1;
    long double sq = 0.0L;
    for (std::size_t i = 0; i < k; ++i)
        sq += static_cast<long double>(p[i]) * p[i];
    const long double wn = std::sqrt(sq);
    const long double z = p[k];

    SocProjection out;
    if (wn <= z) {
        out.projection = p;
        out.distance = 0.0;
        return out;
    }
    if (wn <= -z) {
        out.projection.assign(p.size(), 0.0);
        out.distance = static_cast<double>(std::sqrt(sq + z * z));
        return out;
    }
    const long double coef = (z + wn) / 2.0L;
    out.projection.resize(p.size());
    for (std::size_t i = 0; i < k; ++i)
        out.projection[i] = static_cast<double>(coef * p[i] / wn);
    out.projection[k] = static_cast<double>(coef);
    out.distance = static_cast<double>((wn - z) / std::sqrt(2.0L));
    return out;
}

} // namespace conic
