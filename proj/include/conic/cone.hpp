#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conic/double_description.hpp"
#include "conic/lp.hpp"
#include "conic/norm.hpp"
#include "conic/rational.hpp"

namespace conic {

/**
 * A closed convex polyhedral cone kept in both descriptions:
 * cone{generators} = {x : a·x >= 0 for every inequality normal a}.
 *
 * Both lists are irredundant and primitive-integer scaled. An empty generator
 * list is the cone {0}; an empty inequality list is the whole space. Values are
 * immutable after construction.
 */
class PolyhedralCone
{
  public:
    PolyhedralCone() = default;

    static PolyhedralCone from_generators(std::size_t dim, std::vector<RVector> gens)
    {
        check_dim(dim, gens);
        ConeRepresentation v{RepKind::Generators, dim, std::move(gens), {}};
        ConeRepresentation h = convert_representation(v, ConversionDirection::VtoH);
        ConeRepresentation v2 = convert_representation(h, ConversionDirection::HtoV);
        return PolyhedralCone(dim, std::move(v2.vectors), std::move(h.vectors));
    }

    static PolyhedralCone from_inequalities(std::size_t dim, std::vector<RVector> normals)
    {
        check_dim(dim, normals);
        ConeRepresentation h{RepKind::Inequalities, dim, std::move(normals), {}};
        ConeRepresentation v = convert_representation(h, ConversionDirection::HtoV);
        ConeRepresentation h2 = convert_representation(v, ConversionDirection::VtoH);
        return PolyhedralCone(dim, std::move(v.vectors), std::move(h2.vectors));
    }

    /// R^dim_+; both descriptions are the unit vectors, so no conversion is run.
    static PolyhedralCone nonnegative_orthant(std::size_t dim)
    {
        std::vector<RVector> e;
        for (std::size_t i = 0; i < dim; ++i)
            e.push_back(unit_vector(dim, i));
        std::reverse(e.begin(), e.end()); // lexicographic order
        return PolyhedralCone(dim, e, e);
    }

    static PolyhedralCone whole_space(std::size_t dim) { return from_inequalities(dim, {}); }
    static PolyhedralCone zero_cone(std::size_t dim) { return from_generators(dim, {}); }

    std::size_t dim() const { return dim_; }
    const std::vector<RVector>& generators() const { return gens_; }
    const std::vector<RVector>& inequalities() const { return normals_; }

    bool contains(const RVector& x) const
    {
        if (x.size() != dim_)
            throw MalformedInput("cone_contains: point of dimension " + std::to_string(x.size())
                                 + " tested against a cone in dimension " + std::to_string(dim_));
        for (const auto& a : normals_)
            if (sgn(dot(a, x)) < 0)
                return false;
        return true;
    }

    /// f in K+ : f·g >= 0 for every generator g.
    bool dual_contains(const RVector& f) const
    {
        if (f.size() != dim_)
            throw MalformedInput("dual membership: functional of dimension " + std::to_string(f.size())
                                 + " against a cone in dimension " + std::to_string(dim_));
        for (const auto& g : gens_)
            if (sgn(dot(f, g)) < 0)
                return false;
        return true;
    }

    PolyhedralCone dual() const { return PolyhedralCone(dim_, normals_, gens_); }

    PolyhedralCone negated() const
    {
        std::vector<RVector> g, h;
        for (const auto& v : gens_)
            g.push_back(-v);
        for (const auto& v : normals_)
            h.push_back(-v);
        return PolyhedralCone(dim_, canonical_directions(g), canonical_directions(h));
    }

    /// this ⊆ other, by testing every generator against the other's inequalities.
    bool is_subset_of(const PolyhedralCone& other) const
    {
        if (other.dim_ != dim_)
            return false;
        for (const auto& g : gens_)
            if (!other.contains(g))
                return false;
        return true;
    }

    bool operator==(const PolyhedralCone& other) const
    {
        return is_subset_of(other) && other.is_subset_of(*this);
    }

    /// int K nonempty: one LP looking for x with a·x >= 1 for every normal a.
    bool has_interior() const
    {
        if (normals_.empty())
            return true;
        LinearProgram lp(dim_, VarBound::Free);
        for (const auto& a : normals_)
            lp.add_row(a, RowSense::GreaterEqual, Rational(1));
        return lp_solve(lp).status == LPStatus::Optimal;
    }

    /// x in int K, valid for full-dimensional K (irredundant normals are facet normals).
    bool interior_contains(const RVector& x) const
    {
        if (x.size() != dim_)
            throw MalformedInput("interior membership: dimension mismatch");
        for (const auto& a : normals_)
            if (sgn(dot(a, x)) <= 0)
                return false;
        return true;
    }

  private:
    PolyhedralCone(std::size_t dim, std::vector<RVector> gens, std::vector<RVector> normals)
        : dim_(dim), gens_(std::move(gens)), normals_(std::move(normals))
    {
    }

    static void check_dim(std::size_t dim, const std::vector<RVector>& vs)
    {
        if (dim == 0)
            throw MalformedInput("cone dimension must be positive");
        for (const auto& v : vs)
            if (v.size() != dim)
                throw MalformedInput("cone vector " + to_string(v) + " does not have dimension "
                                     + std::to_string(dim));
    }

    std::size_t dim_ = 0;
    std::vector<RVector> gens_;
    std::vector<RVector> normals_;
};

inline PolyhedralCone dual_cone(const PolyhedralCone& k) { return k.dual(); }

inline bool cone_contains(const PolyhedralCone& k, const RVector& x) { return k.contains(x); }

/// Pointed iff no nonzero nonnegative combination of generators vanishes (one LP).
inline bool is_pointed(const PolyhedralCone& k)
{
    const auto& g = k.generators();
    if (g.empty())
        return true;
    LinearProgram lp(g.size());
    for (std::size_t i = 0; i < k.dim(); ++i) {
        RVector row(g.size());
        for (std::size_t j = 0; j < g.size(); ++j)
            row[j] = g[j][i];
        lp.add_row(std::move(row), RowSense::Equal, Rational(0));
    }
    lp.add_row(RVector(g.size(), Rational(1)), RowSense::LessEqual, Rational(1));
    for (auto& c : lp.objective)
        c = -1;
    const LPOutcome r = lp_solve(lp);
    return r.status == LPStatus::Optimal && sgn(r.value) == 0;
}

enum class DistanceMode { Primal, Dual, AnalyticSoc };

inline const char* to_string(DistanceMode m)
{
    switch (m) {
    case DistanceMode::Primal: return "primal-LP";
    case DistanceMode::Dual: return "dual-formula";
    case DistanceMode::AnalyticSoc: return "analytic-SOC";
    }
    return "?";
}

struct DistanceResult
{
    Rational value;
    DistanceMode mode = DistanceMode::Primal;
    /// nearest cone point (primal) or maximizing functional in K+ ∩ dual ball (dual)
    RVector witness;
};

namespace detail {

// min ||x - sum_j lambda_j g_j|| over lambda >= 0, for Linf or L1.
inline DistanceResult primal_distance(const RVector& x, const std::vector<RVector>& gens, NormKind norm)
{
    const std::size_t d = x.size();
    const std::size_t ng = gens.size();
    const std::size_t naux = norm == NormKind::Linf ? 1 : d;
    LinearProgram lp(ng + naux);
    for (std::size_t a = 0; a < naux; ++a)
        lp.objective[ng + a] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        RVector up(ng + naux), down(ng + naux);
        for (std::size_t j = 0; j < ng; ++j) {
            up[j] = -gens[j][i];
            down[j] = gens[j][i];
        }
        const std::size_t aux = norm == NormKind::Linf ? ng : ng + i;
        up[aux] = -1;
        down[aux] = -1;
        lp.add_row(std::move(up), RowSense::LessEqual, -x[i]);
        lp.add_row(std::move(down), RowSense::LessEqual, x[i]);
    }
    const LPOutcome r = lp_solve(lp);
    if (r.status != LPStatus::Optimal)
        throw Error("primal distance LP did not reach an optimum");
    RVector k = zeros(d);
    for (std::size_t j = 0; j < ng; ++j)
        if (sgn(r.witness[j]) != 0)
            k = k + r.witness[j] * gens[j];
    return DistanceResult{r.value, DistanceMode::Primal, std::move(k)};
}

// sup { -f·x : f = sum_j mu_j a_j, mu >= 0, ||f||_* <= 1 }.
inline DistanceResult dual_distance(const RVector& x, const std::vector<RVector>& normals, NormKind norm)
{
    const std::size_t d = x.size();
    const std::size_t nh = normals.size();
    const bool l1_ball = norm == NormKind::Linf; // dual of sup norm is the 1-norm
    const std::size_t naux = l1_ball ? d : 0;
    LinearProgram lp(nh + naux);
    for (std::size_t j = 0; j < nh; ++j)
        lp.objective[j] = dot(normals[j], x);
    if (l1_ball) {
        for (std::size_t i = 0; i < d; ++i) {
            RVector up(nh + naux), down(nh + naux);
            for (std::size_t j = 0; j < nh; ++j) {
                up[j] = normals[j][i];
                down[j] = -normals[j][i];
            }
            up[nh + i] = -1;
            down[nh + i] = -1;
            lp.add_row(std::move(up), RowSense::LessEqual, Rational(0));
            lp.add_row(std::move(down), RowSense::LessEqual, Rational(0));
        }
        RVector sum(nh + naux);
        for (std::size_t i = 0; i < d; ++i)
            sum[nh + i] = 1;
        lp.add_row(std::move(sum), RowSense::LessEqual, Rational(1));
    } else {
        for (std::size_t i = 0; i < d; ++i) {
            RVector up(nh), down(nh);
            for (std::size_t j = 0; j < nh; ++j) {
                up[j] = normals[j][i];
                down[j] = -normals[j][i];
            }
            lp.add_row(std::move(up), RowSense::LessEqual, Rational(1));
            lp.add_row(std::move(down), RowSense::LessEqual, Rational(1));
        }
    }
    const LPOutcome r = lp_solve(lp);
    if (r.status != LPStatus::Optimal)
        throw Error("dual distance LP did not reach an optimum");
    RVector f = zeros(d);
    for (std::size_t j = 0; j < nh; ++j)
        if (sgn(r.witness[j]) != 0)
            f = f + r.witness[j] * normals[j];
    return DistanceResult{-r.value, DistanceMode::Dual, std::move(f)};
}

} // namespace detail

/**
 * d(x, K) in a polyhedral norm. Primal mode minimizes ||x - k|| over k in K;
 * dual mode maximizes -f(x) over f in K+ with dual norm at most one. Both are
 * exact LPs and agree exactly by LP duality.
 */
inline DistanceResult cone_distance(const RVector& x, const PolyhedralCone& k, const NormTag& norm,
                                    DistanceMode mode)
{
    if (x.size() != k.dim())
        throw MalformedInput("cone_distance: point of dimension " + std::to_string(x.size())
                             + " against a cone in dimension " + std::to_string(k.dim()));
    if (norm.kind == NormKind::L2approx)
        throw Unsupported("cone_distance: L2 distance is only available for the ice-cream cone through soc_project");
    switch (mode) {
    case DistanceMode::Primal: return detail::primal_distance(x, k.generators(), norm.kind);
    case DistanceMode::Dual: return detail::dual_distance(x, k.inequalities(), norm.kind);
    case DistanceMode::AnalyticSoc: break;
    }
    throw Unsupported("cone_distance: analytic mode applies only to the second-order cone (soc_project)");
}

} // namespace conic
