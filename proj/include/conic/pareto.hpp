#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "conic/cone.hpp"
#include "conic/error.hpp"
#include "conic/lp.hpp"

namespace conic {

namespace detail {

inline void check_points(const std::vector<RVector>& a, const PolyhedralCone& k, const char* what)
{
    if (a.empty())
        throw MalformedInput(std::string(what) + ": empty point set");
    for (const auto& p : a)
        if (p.size() != k.dim())
            throw MalformedInput(std::string(what) + ": point " + to_string(p) + " does not match the cone dimension");
}

/// x in int K for full-dimensional K: every facet normal is strictly positive on x.
inline bool in_interior(const RVector& x, const PolyhedralCone& k) { return k.interior_contains(x); }

inline bool attains_min(const std::vector<RVector>& a, const RVector& f, const RVector& at)
{
    const Rational fa = dot(f, at);
    return std::all_of(a.begin(), a.end(), [&](const RVector& b) { return dot(f, b) >= fa; });
}

} // namespace detail

/// Points a with no b != a in A such that a - b lies in K \ {0}. Input order is kept.
inline std::vector<RVector> pareto_points(const std::vector<RVector>& a, const PolyhedralCone& k)
{
    detail::check_points(a, k, "pareto_points");
    if (!is_pointed(k))
        throw PreconditionViolated("pareto_points: the cone is not pointed");
    std::vector<RVector> out;
    for (const auto& p : a) {
        bool dominated = false;
        for (const auto& b : a) {
            const RVector diff = p - b;
            if (!is_zero(diff) && k.contains(diff)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

/// Points a with no b in A such that a - b lies in int K. Input order is kept.
inline std::vector<RVector> weak_pareto_points(const std::vector<RVector>& a, const PolyhedralCone& k)
{
    detail::check_points(a, k, "weak_pareto_points");
    if (!k.has_interior())
        throw PreconditionViolated("weak_pareto_points: the cone has empty interior");
    std::vector<RVector> out;
    for (const auto& p : a) {
        bool dominated = false;
        for (const auto& b : a)
            if (detail::in_interior(p - b, k)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

/**
 * f in K+ \ {0} with f(a) = min f(A), or nothing.
 *
 * Tries the generators of K+ and their pairwise averages first, then one
 * feasibility LP for f = sum μ_j h_j (h_j generators of K+, sum μ = 1) with
 * f·(b - a) >= 0 for every b in A. Every returned functional is re-verified.
 */
inline std::optional<RVector> scalarization_witness(const std::vector<RVector>& a, const PolyhedralCone& k,
                                                    const RVector& at)
{
    detail::check_points(a, k, "scalarization_witness");
    if (std::find(a.begin(), a.end(), at) == a.end())
        throw MalformedInput("scalarization_witness: " + to_string(at) + " is not a point of A");
    if (!k.has_interior())
        throw PreconditionViolated("scalarization_witness: the cone has empty interior");
    const auto& h = k.inequalities();
    auto accept = [&](const RVector& f) { return !is_zero(f) && k.dual_contains(f) && detail::attains_min(a, f, at); };
    for (const auto& f : h)
        if (accept(f))
            return f;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            const RVector f = Rational(1, 2) * (h[i] + h[j]);
            if (accept(f))
                return f;
        }
    if (h.empty())
        return std::nullopt;
    LinearProgram lp(h.size());
    for (const auto& b : a) {
        RVector row(h.size());
        const RVector diff = b - at;
        for (std::size_t j = 0; j < h.size(); ++j)
            row[j] = dot(h[j], diff);
        lp.add_row(std::move(row), RowSense::GreaterEqual, Rational(0));
    }
    lp.add_row(RVector(h.size(), Rational(1)), RowSense::Equal, Rational(1));
    const LPOutcome r = lp_solve(lp);
    if (r.status != LPStatus::Optimal)
        return std::nullopt;
    RVector f = zeros(k.dim());
    for (std::size_t j = 0; j < h.size(); ++j)
        if (sgn(r.witness[j]) != 0)
            f = f + r.witness[j] * h[j];
    if (!accept(f))
        return std::nullopt;
    return f;
}

struct ParetoReport
{
    std::vector<RVector> pareto_points;
    std::vector<RVector> weak_pareto_points;
    /// index into weak_pareto_points -> functional
    std::map<std::size_t, RVector> scalarization_witnesses;
};

/// Pareto and weak Pareto points of a finite set, with witnesses where they exist.
inline ParetoReport pareto_report(const std::vector<RVector>& a, const PolyhedralCone& k)
{
    ParetoReport r;
    r.pareto_points = pareto_points(a, k);
    r.weak_pareto_points = weak_pareto_points(a, k);
    for (std::size_t i = 0; i < r.weak_pareto_points.size(); ++i)
        if (auto f = scalarization_witness(a, k, r.weak_pareto_points[i]))
            r.scalarization_witnesses.emplace(i, std::move(*f));
    return r;
}

} // namespace conic
