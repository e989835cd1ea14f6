#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conic/cone.hpp"
#include "conic/double_description.hpp"
#include "conic/extended_real.hpp"
#include "conic/lp.hpp"
#include "conic/rational.hpp"

namespace conic {

/// Finitely many points A = {a_1..a_n}.
struct FiniteGen
{
    std::vector<RVector> points;
};

/// The polyhedron {x : a_i·x >= b_i}.
struct HPolyhedron
{
    std::vector<RVector> normals;
    RVector offsets;
};

/// A truncated sequence a^(1), ..., a^(N) standing in for an infinite family.
struct SequenceFamily
{
    std::vector<RVector> table;
    std::string rule; // documentation only
};

/// conv(points) + cone(rays).
struct SetVRep
{
    std::vector<RVector> points;
    std::vector<RVector> rays;
};

/// f·x >= beta.
struct HalfSpace
{
    RVector normal;
    Rational offset;
};

namespace detail {

/// One LP: x in conv(points) + cone(rays)?
inline bool in_conv_plus_cone(const RVector& x, const std::vector<RVector>& points, const std::vector<RVector>& rays)
{
    if (points.empty())
        return false;
    const std::size_t d = x.size();
    const std::size_t np = points.size();
    LinearProgram lp(np + rays.size());
    for (std::size_t i = 0; i < d; ++i) {
        RVector row(np + rays.size());
        for (std::size_t j = 0; j < np; ++j)
            row[j] = points[j][i];
        for (std::size_t j = 0; j < rays.size(); ++j)
            row[np + j] = rays[j][i];
        lp.add_row(std::move(row), RowSense::Equal, x[i]);
    }
    RVector sum(np + rays.size());
    for (std::size_t j = 0; j < np; ++j)
        sum[j] = 1;
    lp.add_row(std::move(sum), RowSense::Equal, Rational(1));
    return lp_solve(lp).status == LPStatus::Optimal;
}

/// Drops points lying in conv(other points) + cone(rays); one LP per candidate.
inline std::vector<RVector> prune_points(std::vector<RVector> points, const std::vector<RVector>& rays)
{
    points = canonical_points(std::move(points));
    for (std::size_t i = 0; i < points.size() && points.size() > 1;) {
        std::vector<RVector> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i)
                others.push_back(points[j]);
        if (in_conv_plus_cone(points[i], others, rays))
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return points;
}

/// V-description of {x : a·x >= b} through the homogenized cone {(x,t) : a·x - b t >= 0, t >= 0}.
inline SetVRep polyhedron_vrep(std::size_t dim, const std::vector<RVector>& normals, const RVector& offsets)
{
    std::vector<RVector> hom;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        RVector row = normals[i];
        row.push_back(-offsets[i]);
        hom.push_back(std::move(row));
    }
    RVector t = zeros(dim + 1);
    t[dim] = 1;
    hom.push_back(std::move(t));
    SetVRep out;
    for (auto& g : remove_redundant(dd_generators(dim + 1, hom))) {
        const Rational tg = g[dim];
        g.pop_back();
        if (sgn(tg) > 0)
            out.points.push_back(Rational(1 / tg) * g);
        else
            out.rays.push_back(std::move(g));
    }
    return out;
}

/// H-description of conv(points) + cone(rays), through the homogenized cone over (p,1) and (r,0).
inline std::vector<HalfSpace> vrep_halfspaces(std::size_t dim, const SetVRep& v)
{
    std::vector<RVector> hom;
    for (const auto& p : v.points) {
        RVector g = p;
        g.push_back(Rational(1));
        hom.push_back(std::move(g));
    }
    for (const auto& r : v.rays) {
        RVector g = r;
        g.push_back(Rational(0));
        hom.push_back(std::move(g));
    }
    std::vector<HalfSpace> out;
    for (auto& a : remove_redundant(dd_generators(dim + 1, hom))) {
        Rational beta = -a[dim];
        a.pop_back();
        if (is_zero(a))
            continue; // t >= 0
        out.push_back(HalfSpace{std::move(a), std::move(beta)});
    }
    return out;
}

} // namespace detail

/**
 * A set A together with its ambient cone K. The value always denotes
 * Ã = cl conv(A + K); the closure and the +K are never materialized.
 *
 * Polyhedral variants (finite, hpoly) carry a V-description of Ã computed at
 * construction: points plus rays, where the rays include the generators of K.
 */
class ConicSet
{
  public:
    using Rep = std::variant<FiniteGen, HPolyhedron, SequenceFamily>;

    static ConicSet finite(PolyhedralCone k, std::vector<RVector> points)
    {
        if (points.empty())
            throw MalformedInput("finite set needs at least one point");
        for (const auto& p : points)
            check_point(k, p, "finite set");
        ConicSet s(std::move(k), FiniteGen{points});
        s.vrep_.rays = s.ambient_.generators();
        s.vrep_.points = canonical_points(std::move(points));
        return s;
    }

    static ConicSet hpoly(PolyhedralCone k, std::vector<RVector> normals, RVector offsets)
    {
        if (normals.size() != offsets.size())
            throw MalformedInput("hpoly set: " + std::to_string(normals.size()) + " normals but "
                                 + std::to_string(offsets.size()) + " offsets");
        for (const auto& a : normals)
            check_point(k, a, "hpoly normal");
        const std::size_t dim = k.dim();
        LinearProgram feas(dim, VarBound::Free);
        for (std::size_t i = 0; i < normals.size(); ++i)
            feas.add_row(normals[i], RowSense::GreaterEqual, offsets[i]);
        if (lp_solve(feas).status == LPStatus::Infeasible)
            throw MalformedInput("hpoly set is empty (its inequalities are infeasible)");
        SetVRep p = detail::polyhedron_vrep(dim, normals, offsets);
        ConicSet s(std::move(k), HPolyhedron{std::move(normals), std::move(offsets)});
        std::vector<RVector> rays = p.rays;
        rays.insert(rays.end(), s.ambient_.generators().begin(), s.ambient_.generators().end());
        s.vrep_.rays = remove_redundant(canonical_directions(std::move(rays)));
        s.vrep_.points = detail::prune_points(std::move(p.points), s.vrep_.rays);
        return s;
    }

    static ConicSet family(PolyhedralCone k, std::vector<RVector> table, std::string rule = {})
    {
        if (table.empty())
            throw MalformedInput("sequence family needs at least one element");
        for (const auto& p : table)
            check_point(k, p, "family element");
        return ConicSet(std::move(k), SequenceFamily{std::move(table), std::move(rule)});
    }

    /// Builds conv(points) + cone(rays) + K: a finite set when every ray lies in K, an hpoly otherwise.
    static ConicSet from_vrep(PolyhedralCone k, std::vector<RVector> points, std::vector<RVector> rays)
    {
        bool inside = true;
        for (const auto& r : rays)
            if (!k.contains(r))
                inside = false;
        if (inside)
            return finite(std::move(k), detail::prune_points(std::move(points), k.generators()));
        SetVRep v{points, rays};
        v.rays.insert(v.rays.end(), k.generators().begin(), k.generators().end());
        std::vector<RVector> normals;
        RVector offsets;
        for (auto& h : detail::vrep_halfspaces(k.dim(), v)) {
            normals.push_back(std::move(h.normal));
            offsets.push_back(std::move(h.offset));
        }
        return hpoly(std::move(k), std::move(normals), std::move(offsets));
    }

    std::size_t dim() const { return ambient_.dim(); }
    const PolyhedralCone& ambient() const { return ambient_; }
    const Rep& rep() const { return rep_; }

    bool is_finite() const { return std::holds_alternative<FiniteGen>(rep_); }
    bool is_hpoly() const { return std::holds_alternative<HPolyhedron>(rep_); }
    bool is_family() const { return std::holds_alternative<SequenceFamily>(rep_); }
    bool is_polyhedral() const { return !is_family(); }

    /// V-description of Ã (points and rays, rays including the generators of K).
    const SetVRep& vrep() const
    {
        require_polyhedral("V-description");
        return vrep_;
    }

    /// The points the inf-support function is evaluated over: generator points, or the truncated table.
    const std::vector<RVector>& sample_points() const
    {
        if (const auto* f = std::get_if<SequenceFamily>(&rep_))
            return f->table;
        return vrep_.points;
    }

    /// The same set over a different ambient cone.
    ConicSet with_ambient(PolyhedralCone k) const
    {
        if (const auto* f = std::get_if<FiniteGen>(&rep_))
            return finite(std::move(k), f->points);
        if (const auto* h = std::get_if<HPolyhedron>(&rep_))
            return hpoly(std::move(k), h->normals, h->offsets);
        const auto& fam = std::get<SequenceFamily>(rep_);
        return family(std::move(k), fam.table, fam.rule);
    }

    void require_polyhedral(const char* what) const
    {
        if (is_family())
            throw Unsupported(std::string(what) + " is not available for a sequence family");
    }

  private:
    ConicSet(PolyhedralCone k, Rep rep) : ambient_(std::move(k)), rep_(std::move(rep)) {}

    static void check_point(const PolyhedralCone& k, const RVector& p, const char* what)
    {
        if (p.size() != k.dim())
            throw MalformedInput(std::string(what) + " " + to_string(p) + " has dimension " + std::to_string(p.size())
                                 + ", expected " + std::to_string(k.dim()));
    }

    PolyhedralCone ambient_;
    Rep rep_;
    SetVRep vrep_;
};

/// H-description of Ã as halfspaces f·x >= beta.
inline std::vector<HalfSpace> hrep_of(const ConicSet& s)
{
    return detail::vrep_halfspaces(s.dim(), s.vrep());
}

/// inf f(Ã); an empty value means -infinity.
struct MValue
{
    std::optional<Rational> value;
    bool attained = false;
    std::optional<RVector> argmin;
    /// families only: "stable" if the minimum over the first half of the table is already the overall minimum
    std::string trend;

    bool is_minus_infinity() const { return !value.has_value(); }
};

inline MValue m_value(const ConicSet& s, const RVector& f)
{
    if (f.size() != s.dim())
        throw MalformedInput("m_value: functional of dimension " + std::to_string(f.size()) + " on a set in dimension "
                             + std::to_string(s.dim()));
    if (!s.ambient().dual_contains(f))
        return MValue{};
    if (s.is_polyhedral())
        for (const auto& r : s.vrep().rays)
            if (sgn(dot(f, r)) < 0)
                return MValue{};
    const auto& pts = s.sample_points();
    std::size_t best = 0;
    Rational best_v = dot(f, pts[0]);
    std::size_t half_best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Rational val = dot(f, pts[i]);
        if (val < best_v) {
            best_v = std::move(val);
            best = i;
        }
        if (i < (pts.size() + 1) / 2)
            half_best = best;
    }
    MValue out{best_v, true, pts[best], {}};
    if (s.is_family())
        out.trend = half_best == best ? "stable" : "decreasing";
    return out;
}

/**
 * e(f(Ã), f(K)), the excess of the image of the set over the image of the cone.
 * f(K) is [0,inf) for f in K+, (-inf,0] for f in K-, {0} for f in both, and R
 * otherwise.
 */
inline ExtendedReal excess_on_functional(const ConicSet& s, const RVector& f)
{
    if (f.size() != s.dim())
        throw MalformedInput("excess_on_functional: dimension mismatch");
    const PolyhedralCone& k = s.ambient();
    const bool plus = k.dual_contains(f);
    const bool minus = k.dual_contains(-f);
    if (!plus && !minus)
        return ExtendedReal::finite(Rational(0));
    const auto& pts = s.sample_points();
    if (plus && minus) {
        if (s.is_polyhedral())
            for (const auto& r : s.vrep().rays)
                if (sgn(dot(f, r)) != 0)
                    return ExtendedReal::infinity();
        Rational m(0);
        for (const auto& p : pts)
            m = std::max(m, Rational(abs(dot(f, p))));
        return ExtendedReal::finite(m);
    }
    const RVector g = plus ? f : -f;
    const MValue mv = m_value(s, g);
    if (mv.is_minus_infinity())
        return ExtendedReal::infinity();
    return ExtendedReal::finite(sgn(*mv.value) < 0 ? Rational(-*mv.value) : Rational(0));
}

inline PolyhedralCone recession_cone_of(const ConicSet& s)
{
    if (s.is_finite())
        return s.ambient();
    s.require_polyhedral("recession_cone_of");
    return PolyhedralCone::from_generators(s.dim(), s.vrep().rays);
}

/// Negative polar of the recession cone; equals the barrier cone for polyhedral sets.
inline PolyhedralCone barrier_cone_of(const ConicSet& s)
{
    s.require_polyhedral("barrier_cone_of");
    return recession_cone_of(s).dual().negated();
}

inline bool contains_point(const ConicSet& s, const RVector& x)
{
    require_same_dim(x, RVector(s.dim()), "set membership");
    return detail::in_conv_plus_cone(x, s.vrep().points, s.vrep().rays);
}

/**
 * A point of Ã1 outside Ã2, or nothing when Ã1 ⊆ Ã2. A failing generator
 * point is returned as is; for a failing ray r the point p + 2^j r (p the
 * first generator point of Ã1) is returned for the smallest j that leaves Ã2.
 */
inline std::optional<RVector> find_uncovered(const ConicSet& s1, const ConicSet& s2)
{
    if (s1.dim() != s2.dim())
        throw MalformedInput("set inclusion: sets of dimension " + std::to_string(s1.dim()) + " and "
                             + std::to_string(s2.dim()));
    s1.require_polyhedral("set inclusion");
    s2.require_polyhedral("set inclusion");
    const SetVRep& v1 = s1.vrep();
    const SetVRep& v2 = s2.vrep();
    for (const auto& p : v1.points)
        if (!detail::in_conv_plus_cone(p, v2.points, v2.rays))
            return p;
    for (const auto& r : v1.rays) {
        if (in_conic_hull(r, v2.rays))
            continue;
        Rational step(1);
        for (int j = 0; j < 4096; ++j, step *= 2) {
            RVector x = v1.points.front() + step * r;
            if (!detail::in_conv_plus_cone(x, v2.points, v2.rays))
                return x;
        }
        throw Error("find_uncovered: ray escape not found"); // unreachable for r outside rec Ã2
    }
    return std::nullopt;
}

/// Ã1 ⊆ Ã2, decided exactly at generator level.
inline bool set_includes(const ConicSet& s1, const ConicSet& s2) { return !find_uncovered(s1, s2).has_value(); }

inline bool set_equals(const ConicSet& s1, const ConicSet& s2) { return set_includes(s1, s2) && set_includes(s2, s1); }

/// Ã1 ⊕ Ã2 = cl(Ã1 + Ã2); both sets must share the ambient cone.
inline ConicSet minkowski_add(const ConicSet& s1, const ConicSet& s2)
{
    if (s1.dim() != s2.dim())
        throw MalformedInput("minkowski_add: dimension mismatch");
    if (!(s1.ambient() == s2.ambient()))
        throw MalformedInput("minkowski_add: the two sets have different ambient cones");
    s1.require_polyhedral("minkowski_add");
    s2.require_polyhedral("minkowski_add");
    std::vector<RVector> sums;
    for (const auto& p : s1.vrep().points)
        for (const auto& q : s2.vrep().points)
            sums.push_back(p + q);
    std::vector<RVector> rays = s1.vrep().rays;
    rays.insert(rays.end(), s2.vrep().rays.begin(), s2.vrep().rays.end());
    rays = remove_redundant(canonical_directions(std::move(rays)));
    return ConicSet::from_vrep(s1.ambient(), detail::prune_points(std::move(sums), rays), std::move(rays));
}

/// λ ⊙ Ã for λ >= 0 (λ = 0 gives K itself).
inline ConicSet scale(const ConicSet& s, const Rational& lambda)
{
    if (sgn(lambda) < 0)
        throw MalformedInput("scale: negative factor");
    if (sgn(lambda) == 0)
        return ConicSet::finite(s.ambient(), {zeros(s.dim())});
    if (const auto* f = std::get_if<FiniteGen>(&s.rep())) {
        std::vector<RVector> pts;
        for (const auto& p : f->points)
            pts.push_back(lambda * p);
        return ConicSet::finite(s.ambient(), std::move(pts));
    }
    if (const auto* h = std::get_if<HPolyhedron>(&s.rep()))
        return ConicSet::hpoly(s.ambient(), h->normals, lambda * h->offsets);
    const auto& fam = std::get<SequenceFamily>(s.rep());
    std::vector<RVector> table;
    for (const auto& p : fam.table)
        table.push_back(lambda * p);
    return ConicSet::family(s.ambient(), std::move(table), fam.rule);
}

} // namespace conic
