#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "conic/boundedness.hpp"
#include "conic/cone.hpp"
#include "conic/conic_set.hpp"
#include "conic/random_instances.hpp"
#include "conic/soc.hpp"

// Truncated finite-dimensional versions of the classic examples that separate
// cone-boundedness from dual cone-boundedness.
namespace conic::examples {

// ---- c0 family: a^(k) = (k^2, ..., k^2, -k, 0, ...) with k leading entries ----

/// a^(k) for k = 1..n-2, each in R^n.
inline std::vector<RVector> c0_family_table(std::size_t n)
{
    if (n < 3)
        throw MalformedInput("c0 family: dimension must be at least 3");
    std::vector<RVector> table;
    for (std::size_t k = 1; k + 2 <= n; ++k) {
        RVector a = zeros(n);
        const Rational kk(static_cast<unsigned long>(k));
        for (std::size_t i = 0; i < k; ++i)
            a[i] = kk * kk;
        a[k] = -kk;
        table.push_back(std::move(a));
    }
    return table;
}

/// (2^-1, 2^-2, ..., 2^-n).
inline RVector halving_probe(std::size_t n)
{
    RVector f(n);
    for (std::size_t i = 0; i < n; ++i)
        f[i] = Rational(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(i + 1));
    return f;
}

struct C0Result
{
    std::size_t dimension = 0;
    std::vector<IndexedDistance> distances; // Linf, primal LP
    bool distances_match_index = false;     // d(a^(k), K) == k for every k
    bool distances_match_dual = false;      // primal and dual LP agree for every k
    RVector probe;
    std::vector<Rational> probe_values;     // x*(a^(k))
    bool probe_lower_bound = false;         // x*(a^(k)) >= (k^2 - k)/2 for every k
    BoundednessReport report;
};

inline C0Result run_c0_family(std::size_t n = 64, std::size_t truncation = 64)
{
    C0Result r;
    r.dimension = n;
    const auto k = PolyhedralCone::nonnegative_orthant(n);
    const auto table = c0_family_table(n);
    r.distances_match_index = true;
    r.distances_match_dual = true;
    r.probe = halving_probe(n);
    r.probe_lower_bound = true;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Rational idx(static_cast<unsigned long>(i + 1));
        const Rational d = cone_distance(table[i], k, NormTag::linf(), DistanceMode::Primal).value;
        const Rational dd = cone_distance(table[i], k, NormTag::linf(), DistanceMode::Dual).value;
        r.distances.push_back({i + 1, d});
        r.distances_match_index = r.distances_match_index && d == idx;
        r.distances_match_dual = r.distances_match_dual && d == dd;
        const Rational v = dot(r.probe, table[i]);
        r.probe_lower_bound = r.probe_lower_bound && v >= (idx * idx - idx) / 2;
        r.probe_values.push_back(v);
    }
    r.report = classify_boundedness(ConicSet::family(k, table, "a^(k) = (k^2 x k, -k, 0, ...)"), {r.probe}, truncation);
    return r;
}

// ---- ice-cream cone K = {(x, y, z) : z >= sqrt(x^2 + y^2)} ----

/// x_n = n / (1 - cos(1/n)) · (cos(1/n), sin(1/n), cos(1/n)).
inline std::array<double, 3> ice_cream_point(unsigned n)
{
    const long double th = 1.0L / n;
    const long double s = std::sin(th / 2);
    const long double c = n / (2 * s * s); // 1 - cos θ = 2 sin^2(θ/2)
    return {static_cast<double>(c * std::cos(th)), static_cast<double>(c * std::sin(th)),
            static_cast<double>(c * std::cos(th))};
}

inline double ice_cream_distance(unsigned n)
{
    const auto p = ice_cream_point(n);
    return soc_project({p[0], p[1], p[2]}).distance;
}

/// ⟨u, x_n⟩ up to the positive factor n / (1 - cos(1/n)).
inline long double ice_cream_pairing_sign(const RVector& u, unsigned n)
{
    const long double th = 1.0L / n;
    const auto w = to_double(u);
    return (static_cast<long double>(w[0]) + w[2]) * std::cos(th) + static_cast<long double>(w[1]) * std::sin(th);
}

struct EventualSign
{
    RVector u;
    unsigned n_u = 1;      // smallest n with ⟨u, x_m⟩ >= 0 for all m >= n
    bool verified = false; // checked on [n_u, n_u + horizon] and failing at n_u - 1
};

/**
 * For u in K the pairing (u1 + u3) cos θ + u2 sin θ, θ = 1/n, is increasing in
 * n when u2 < 0 and nonnegative otherwise, so the first nonnegative index is
 * the threshold.
 */
inline EventualSign eventual_sign(const RVector& u, unsigned horizon = 2000)
{
    EventualSign e{u, 1, false};
    const auto w = to_double(u);
    if (w[1] < 0) {
        const double t = (w[0] + w[2]) / -w[1];
        e.n_u = std::max(1U, static_cast<unsigned>(std::floor(1.0 / std::atan(t))));
        while (ice_cream_pairing_sign(u, e.n_u) < 0)
            ++e.n_u;
        while (e.n_u > 1 && ice_cream_pairing_sign(u, e.n_u - 1) >= 0)
            --e.n_u;
    }
    e.verified = e.n_u == 1 || ice_cream_pairing_sign(u, e.n_u - 1) < 0;
    for (unsigned m = e.n_u; m <= e.n_u + horizon && e.verified; ++m)
        e.verified = ice_cream_pairing_sign(u, m) >= 0;
    return e;
}

/// Rational points of K: even draws on the boundary circle (rational parametrization), odd draws inside.
inline std::vector<RVector> ice_cream_samples(std::uint64_t seed, std::size_t count = 8)
{
    InstanceGenerator gen(seed);
    std::vector<RVector> out;
    for (std::size_t i = 0; i < count; ++i) {
        const Rational r(1 + gen.integer(0, 4));
        if (i % 2 == 0) {
            const Rational s = gen.rational(12, 5);
            const Rational q = 1 + s * s;
            out.push_back({r * (1 - s * s) / q, r * 2 * s / q, r});
        } else {
            const Rational x = gen.rational(3, 4), y = gen.rational(3, 4);
            out.push_back({x, y, abs(x) + abs(y) + gen.nonnegative_rational(2, 4)});
        }
    }
    return out;
}

/// m generators (cos 2πj/m, sin 2πj/m, 1) spanning a cone inscribed in K.
inline std::vector<std::array<double, 3>> inscribed_cone(unsigned m)
{
    std::vector<std::array<double, 3>> g;
    for (unsigned j = 0; j < m; ++j) {
        const double a = 2 * std::numbers::pi * j / m;
        g.push_back({std::cos(a), std::sin(a), 1.0});
    }
    return g;
}

/**
 * Euclidean distance from x to the cone spanned by g (3D, generators in cyclic
 * order). The projection lies on the origin, a ray or a facet, so the nearest
 * of the feasible face projections is the answer.
 */
inline double polyhedral_euclidean_distance(const std::array<double, 3>& x, const std::vector<std::array<double, 3>>& g)
{
    auto dot3 = [](const auto& a, const auto& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    auto dist_to = [&](const std::array<double, 3>& p) {
        const double d0 = x[0] - p[0], d1 = x[1] - p[1], d2 = x[2] - p[2];
        return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
    };
    const std::size_t m = g.size();
    bool inside = true;
    for (std::size_t j = 0; j < m; ++j) {
        const auto& a = g[j];
        const auto& b = g[(j + 1) % m];
        const std::array<double, 3> nrm{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        if (dot3(nrm, x) < 0)
            inside = false;
    }
    if (inside)
        return 0.0;
    double best = std::sqrt(dot3(x, x));
    for (std::size_t j = 0; j < m; ++j) {
        const auto& a = g[j];
        const double t = dot3(x, a) / dot3(a, a);
        if (t > 0)
            best = std::min(best, dist_to({t * a[0], t * a[1], t * a[2]}));
        const auto& b = g[(j + 1) % m];
        const double aa = dot3(a, a), ab = dot3(a, b), bb = dot3(b, b), xa = dot3(x, a), xb = dot3(x, b);
        const double det = aa * bb - ab * ab;
        const double alpha = (xa * bb - xb * ab) / det, beta = (xb * aa - xa * ab) / det;
        if (alpha >= 0 && beta >= 0)
            best = std::min(best, dist_to({alpha * a[0] + beta * b[0], alpha * a[1] + beta * b[1], alpha * a[2] + beta * b[2]}));
    }
    return best;
}

// ---- hyperbola A = {(t, 1/t) : t > 0} in R^2_+ ----

/// Points (t, 1/t) at t = 2^(j/steps), |j| <= octaves·steps, rounded to nearby rationals; t = 1 is exact.
inline std::vector<RVector> hyperbola_samples(unsigned octaves = 10, unsigned steps = 64)
{
    std::vector<RVector> pts;
    const int lim = static_cast<int>(octaves * steps);
    for (int j = -lim; j <= lim; ++j) {
        const Rational t = j == 0 ? Rational(1) : exact_from_double(std::exp2(static_cast<double>(j) / steps));
        pts.push_back({t, Rational(1 / t)});
    }
    return pts;
}

/// inf (a t + b / t) over t > 0.
inline double hyperbola_m(double a, double b) { return a > 0 && b > 0 ? 2 * std::sqrt(a * b) : 0.0; }

/// |m(0, 1) - m(1/n, 1)| / ||(0, 1) - (1/n, 1)||.
inline double hyperbola_lipschitz_ratio(double n)
{
    const double dm = std::abs(hyperbola_m(0, 1) - hyperbola_m(1 / n, 1));
    return dm / (1 / n);
}

// ---- openness in c00: U = {e1*} ∪ {e1* + n e_n*}, x_n = e_1 - n^(-1/2) e_n ----

struct OpennessRow
{
    unsigned n = 0;
    double pairing = 0.0;  // (e1* + x_n*)(x_n)
    double expected = 0.0; // 1 - sqrt(n)
    double gap = 0.0;      // ||x_n - x||_inf
};

inline std::vector<OpennessRow> openness_rows(unsigned truncation)
{
    std::vector<OpennessRow> rows;
    for (unsigned n = 2; n <= truncation; ++n) {
        std::vector<double> xn(truncation, 0.0), fn(truncation, 0.0), x(truncation, 0.0);
        x[0] = 1.0;
        xn[0] = 1.0;
        xn[n - 1] = -std::sqrt(1.0 / n);
        fn[0] = 1.0;
        fn[n - 1] = n;
        OpennessRow row{n, 0.0, 1.0 - std::sqrt(static_cast<double>(n)), 0.0};
        for (unsigned i = 0; i < truncation; ++i) {
            row.pairing += fn[i] * xn[i];
            row.gap = std::max(row.gap, std::abs(xn[i] - x[i]));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace conic::examples
