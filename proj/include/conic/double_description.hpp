#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conic/linalg.hpp"
#include "conic/lp.hpp"
#include "conic/rational.hpp"

namespace conic {

enum class RepKind { Generators, Inequalities };
enum class ConversionDirection { VtoH, HtoV };

/**
 * A homogeneous cone description. Generators g describe cone{g}; inequality
 * normals a describe {x : a·x >= 0}. `offsets` exists only so that parsed
 * non-homogeneous data can be rejected; it must be empty or all zero.
 */
struct ConeRepresentation
{
    RepKind kind = RepKind::Generators;
    std::size_t dim = 0;
    std::vector<RVector> vectors;
    RVector offsets;
};

/// One exact LP: is v a nonnegative combination of gens?
inline bool in_conic_hull(const RVector& v, const std::vector<RVector>& gens)
{
    if (is_zero(v))
        return true;
    if (gens.empty())
        return false;
    const std::size_t d = v.size();
    LinearProgram lp(gens.size());
    for (std::size_t i = 0; i < d; ++i) {
        RVector row(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j)
            row[j] = gens[j][i];
        lp.add_row(std::move(row), RowSense::Equal, v[i]);
    }
    return lp_solve(lp).status == LPStatus::Optimal;
}

/// Drops every vector that is a nonnegative combination of the ones still kept (one LP per candidate).
inline std::vector<RVector> remove_redundant(std::vector<RVector> vs)
{
    for (std::size_t i = 0; i < vs.size();) {
        std::vector<RVector> others;
        others.reserve(vs.size() - 1);
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (j != i)
                others.push_back(vs[j]);
        if (in_conic_hull(vs[i], others))
            vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return vs;
}

namespace detail {

/**
 * Double description: generators of {x in R^dim : a·x >= 0 for all a}.
 *
 * Starts from R^dim (lineality basis e_1..e_dim, no rays) and intersects one
 * halfspace at a time in lexicographic order. A halfspace that cuts the current
 * lineality space converts one lineality direction into a ray; otherwise rays
 * are split by sign and adjacent (+,-) pairs are combined. Adjacency uses the
 * algebraic test rank(tight rows) = dim - lineality - 2.
 *
 * Output: the extreme rays followed by +l and -l for each lineality direction.
 */
inline std::vector<RVector> dd_generators(std::size_t dim, const std::vector<RVector>& normals_in)
{
    for (const auto& a : normals_in)
        if (a.size() != dim)
            throw MalformedInput("cone description: vector of dimension " + std::to_string(a.size())
                                 + " in a cone of dimension " + std::to_string(dim));
    const std::vector<RVector> normals = canonical_directions(normals_in);

    std::vector<RVector> lin;
    for (std::size_t i = 0; i < dim; ++i)
        lin.push_back(unit_vector(dim, i));
    std::vector<RVector> rays;
    std::vector<RVector> processed;

    for (const auto& a : normals) {
        std::size_t pick = lin.size();
        Rational al0;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            al0 = dot(a, lin[i]);
            if (sgn(al0) != 0) {
                pick = i;
                break;
            }
        }
        if (pick < lin.size()) {
            RVector l0 = lin[pick];
            if (sgn(al0) < 0) {
                l0 = -l0;
                al0 = -al0;
            }
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pick));
            auto project = [&](RVector& v) {
                const Rational c = dot(a, v);
                if (sgn(c) != 0)
                    v = primitive(v - Rational(c / al0) * l0);
            };
            for (auto& l : lin)
                project(l);
            for (auto& r : rays)
                project(r);
            rays.push_back(primitive(l0));
        } else {
            std::vector<RVector> pos, zero, neg;
            std::vector<Rational> pos_v, neg_v;
            for (auto& r : rays) {
                Rational v = dot(a, r);
                const int s = sgn(v);
                if (s > 0) {
                    pos.push_back(std::move(r));
                    pos_v.push_back(std::move(v));
                } else if (s < 0) {
                    neg.push_back(std::move(r));
                    neg_v.push_back(std::move(v));
                } else {
                    zero.push_back(std::move(r));
                }
            }
            const std::ptrdiff_t target = static_cast<std::ptrdiff_t>(dim) - static_cast<std::ptrdiff_t>(lin.size()) - 2;
            auto tight = [&](const RVector& r) {
                std::vector<bool> z(processed.size());
                for (std::size_t k = 0; k < processed.size(); ++k)
                    z[k] = sgn(dot(processed[k], r)) == 0;
                return z;
            };
            std::vector<std::vector<bool>> pos_t, neg_t;
            for (const auto& p : pos)
                pos_t.push_back(tight(p));
            for (const auto& n : neg)
                neg_t.push_back(tight(n));
            std::vector<RVector> fresh;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = 0; j < neg.size(); ++j) {
                    std::vector<RVector> common;
                    for (std::size_t k = 0; k < processed.size(); ++k)
                        if (pos_t[i][k] && neg_t[j][k])
                            common.push_back(processed[k]);
                    if (static_cast<std::ptrdiff_t>(common.size()) < target)
                        continue;
                    if (static_cast<std::ptrdiff_t>(rank_of(common)) != target)
                        continue;
                    fresh.push_back(primitive(pos_v[i] * neg[j] - neg_v[j] * pos[i]));
                }
            }
            rays = std::move(pos);
            rays.insert(rays.end(), zero.begin(), zero.end());
            rays.insert(rays.end(), fresh.begin(), fresh.end());
            rays = canonical_directions(std::move(rays));
        }
        processed.push_back(a);
    }

    // Rays are reported in the orthogonal complement of the lineality space so
    // the output does not depend on which lineality basis survived.
    std::vector<RVector> ortho;
    for (const auto& l : lin) {
        RVector u = l;
        for (const auto& o : ortho)
            u = u - Rational(dot(u, o) / dot(o, o)) * o;
        ortho.push_back(std::move(u));
    }
    for (auto& r : rays)
        for (const auto& o : ortho)
            r = r - Rational(dot(r, o) / dot(o, o)) * o;
    std::vector<RVector> out = canonical_directions(std::move(rays));
    for (const auto& l : lin) {
        out.push_back(primitive(l));
        out.push_back(primitive(-l));
    }
    return out;
}

} // namespace detail

/**
 * Converts between generator and inequality descriptions of the same cone.
 * The output is irredundant and every vector is primitive-integer scaled.
 */
inline ConeRepresentation convert_representation(const ConeRepresentation& in, ConversionDirection direction)
{
    const RepKind expected = direction == ConversionDirection::VtoH ? RepKind::Generators : RepKind::Inequalities;
    if (in.kind != expected)
        throw MalformedInput("convert_representation: input kind does not match the requested direction");
    if (in.dim == 0)
        throw MalformedInput("convert_representation: dimension must be positive");
    for (const auto& b : in.offsets)
        if (sgn(b) != 0)
            throw MalformedInput("convert_representation: non-homogeneous inequality (nonzero offset "
                                 + to_display_string(b) + ")");
    if (!in.offsets.empty() && in.offsets.size() != in.vectors.size())
        throw MalformedInput("convert_representation: offsets and normals differ in length");

    // Both directions are the same computation: {a : g·a >= 0} is the dual of cone{g}.
    ConeRepresentation out;
    out.kind = direction == ConversionDirection::VtoH ? RepKind::Inequalities : RepKind::Generators;
    out.dim = in.dim;
    out.vectors = remove_redundant(detail::dd_generators(in.dim, in.vectors));
    return out;
}

} // namespace conic
