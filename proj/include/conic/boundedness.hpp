#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conic/cone.hpp"
#include "conic/conic_set.hpp"
#include "conic/double_description.hpp"
#include "conic/error.hpp"

namespace conic {

/// Lower bound m_S(f) for one probe, or a divergence record.
struct ProbeBound
{
    RVector functional;
    MValue m;
    bool diverging = false;
};

/// d(a^(k), K) for the element with 1-based index k.
struct IndexedDistance
{
    std::size_t index = 0;
    Rational distance;
};

struct BoundednessReport
{
    bool k_bounded = false;
    std::optional<Rational> ell;                 // certificate: Ã ⊆ ell·D + K
    std::vector<IndexedDistance> divergence;     // witness when k_bounded is false

    bool dually_k_bounded = false;
    std::vector<ProbeBound> probe_bounds;        // every probe evaluated, in probe order
    std::optional<RVector> diverging_functional; // witness when dually_k_bounded is false
    std::vector<Rational> diverging_values;

    bool hyperbolic = false;
    bool pseudo_hyperbolic = false;
    bool rec_equals_K = false;

    bool heuristic = false;
    std::size_t window = 0; // families: number of table entries examined
};

/// Growth rule for sequence families: divergence when the window-N/2 value is positive and the
/// window-N value is at least 3/2 of it.
inline const Rational& family_growth_factor()
{
    static const Rational g(3, 2);
    return g;
}
inline constexpr std::size_t family_min_window = 32;

namespace detail {

inline std::vector<RVector> validated_probes(const PolyhedralCone& k, const std::vector<RVector>& probes)
{
    for (const auto& f : probes) {
        if (f.size() != k.dim())
            throw MalformedInput("probe " + to_string(f) + " has dimension " + std::to_string(f.size()) + ", expected "
                                 + std::to_string(k.dim()));
        if (!k.dual_contains(f))
            throw InvalidProbe("probe " + to_string(f) + " is not in the dual cone K+");
    }
    std::vector<RVector> all = k.inequalities(); // generators of K+
    for (const auto& f : probes)
        if (std::find(all.begin(), all.end(), f) == all.end())
            all.push_back(f);
    return all;
}

inline bool grows(const Rational& half, const Rational& full)
{
    return sgn(half) > 0 && full >= family_growth_factor() * half;
}

inline BoundednessReport classify_polyhedral(const ConicSet& s, const std::vector<RVector>& probes)
{
    BoundednessReport rep;
    const PolyhedralCone& k = s.ambient();
    const PolyhedralCone rec = recession_cone_of(s);
    rep.rec_equals_K = rec == k;
    rep.hyperbolic = true;        // polyhedral: Ã = bounded part + rec Ã
    rep.pseudo_hyperbolic = true; // polyhedral barrier cones are closed

    std::optional<RVector> escaping;
    for (const auto& r : rec.generators())
        if (!k.contains(r)) {
            escaping = r;
            break;
        }

    if (rep.rec_equals_K) {
        rep.k_bounded = true;
        Rational ell(0);
        for (const auto& p : s.vrep().points)
            ell = std::max(ell, cone_distance(p, k, NormTag::linf(), DistanceMode::Primal).value);
        rep.ell = ell;
    } else {
        const RVector& p0 = s.vrep().points.front();
        Rational step(1);
        for (std::size_t j = 0; j < 6; ++j, step *= 2)
            rep.divergence.push_back(
                {j, cone_distance(p0 + step * *escaping, k, NormTag::linf(), DistanceMode::Primal).value});
    }

    rep.dually_k_bounded = true;
    for (const auto& f : probes) {
        ProbeBound pb{f, m_value(s, f), false};
        if (pb.m.is_minus_infinity()) {
            pb.diverging = true;
            if (rep.dually_k_bounded) {
                rep.dually_k_bounded = false;
                rep.diverging_functional = f;
                const RVector& p0 = s.vrep().points.front();
                const RVector* down = nullptr;
                for (const auto& r : s.vrep().rays)
                    if (sgn(dot(f, r)) < 0)
                        down = &r;
                Rational step(1);
                for (std::size_t j = 0; j < 6; ++j, step *= 2)
                    rep.diverging_values.push_back(dot(f, p0 + step * *down));
            }
        }
        rep.probe_bounds.push_back(std::move(pb));
    }
    return rep;
}

inline BoundednessReport classify_family(const ConicSet& s, const std::vector<RVector>& probes, std::size_t truncation)
{
    BoundednessReport rep;
    rep.heuristic = true;
    const PolyhedralCone& k = s.ambient();
    const auto& table = s.sample_points();
    const std::size_t n = std::min(truncation, table.size());
    const std::size_t half = n / 2;
    rep.window = n;

    Rational d_half(0), d_full(0);
    std::vector<Rational> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = cone_distance(table[i], k, NormTag::linf(), DistanceMode::Primal).value;
        if (i < half)
            d_half = std::max(d_half, dist[i]);
        d_full = std::max(d_full, dist[i]);
    }
    const bool distance_diverges = n >= family_min_window && grows(d_half, d_full);
    rep.k_bounded = !distance_diverges;
    if (rep.k_bounded) {
        rep.ell = d_full;
    } else {
        for (std::size_t i = 1; i <= n; i *= 2)
            rep.divergence.push_back({i, dist[i - 1]});
        if (rep.divergence.back().index != n)
            rep.divergence.push_back({n, dist[n - 1]});
    }

    rep.dually_k_bounded = true;
    for (const auto& f : probes) {
        Rational m_half, m_full;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Rational v = dot(f, table[i]);
            if (i == 0 || v < m_full) {
                m_full = v;
                arg = i;
            }
            if (i < half && (i == 0 || v < m_half))
                m_half = v;
        }
        if (half == 0)
            m_half = m_full;
        const Rational g_half = sgn(m_half) < 0 ? Rational(-m_half) : Rational(0);
        const Rational g_full = sgn(m_full) < 0 ? Rational(-m_full) : Rational(0);
        ProbeBound pb;
        pb.functional = f;
        pb.diverging = n >= family_min_window && grows(g_half, g_full);
        if (!pb.diverging)
            pb.m = MValue{m_full, true, table[arg], m_half == m_full ? "stable" : "decreasing"};
        if (pb.diverging && rep.dually_k_bounded) {
            rep.dually_k_bounded = false;
            rep.diverging_functional = f;
            for (std::size_t i = 1; i <= n; i *= 2)
                rep.diverging_values.push_back(dot(f, table[i - 1]));
        }
        rep.probe_bounds.push_back(std::move(pb));
    }
    // A bounded distance profile bounds every m-value by -ell·||f||, so it certifies the dual flag too.
    if (rep.k_bounded)
        rep.dually_k_bounded = true;

    rep.hyperbolic = rep.k_bounded;
    rep.rec_equals_K = rep.dually_k_bounded;
    rep.pseudo_hyperbolic = rep.dually_k_bounded;
    return rep;
}

} // namespace detail

/**
 * Classifies Ã as K-bounded, dually K-bounded, hyperbolic and pseudo-hyperbolic.
 *
 * Probes must lie in K+; the generators of K+ are always evaluated as well.
 * Polyhedral sets are decided exactly. Sequence families are judged from the
 * first `truncation` table entries by the growth rule above and the report is
 * marked heuristic.
 */
inline BoundednessReport classify_boundedness(const ConicSet& s, const std::vector<RVector>& probes = {},
                                              std::size_t truncation = 64)
{
    const std::vector<RVector> all = detail::validated_probes(s.ambient(), probes);
    if (s.is_family())
        return detail::classify_family(s, all, truncation);
    return detail::classify_polyhedral(s, all);
}

/**
 * Vertices of K+ ∩ D*, where D* is the unit ball of the norm dual to `norm`
 * (the 1-ball for Linf, the sup-ball for L1). The origin is included.
 */
inline std::vector<RVector> dual_ball_section_vertices(const PolyhedralCone& k, const NormTag& norm)
{
    const std::size_t d = k.dim();
    if (norm.kind == NormKind::L2approx)
        throw Unsupported("dual ball section: polyhedral norms only");
    std::vector<RVector> hom; // (f, t): f in K+, ||f||_* <= t
    for (const auto& g : k.generators()) {
        RVector row = g;
        row.push_back(Rational(0));
        hom.push_back(std::move(row));
    }
    if (norm.kind == NormKind::Linf) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            RVector row(d + 1);
            for (std::size_t i = 0; i < d; ++i)
                row[i] = (mask >> i) & 1U ? -1 : 1;
            row[d] = 1;
            hom.push_back(std::move(row));
        }
    } else {
        for (std::size_t i = 0; i < d; ++i) {
            RVector up(d + 1), down(d + 1);
            up[i] = -1;
            up[d] = 1;
            down[i] = 1;
            down[d] = 1;
            hom.push_back(std::move(up));
            hom.push_back(std::move(down));
        }
    }
    std::vector<RVector> out{zeros(d)};
    for (auto& g : remove_redundant(detail::dd_generators(d + 1, hom))) {
        const Rational t = g[d];
        if (sgn(t) <= 0)
            continue;
        g.pop_back();
        out.push_back(Rational(1 / t) * g);
    }
    return canonical_points(std::move(out));
}

} // namespace conic
