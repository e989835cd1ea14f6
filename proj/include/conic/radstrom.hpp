#pragma once

#include "conic/cancellation.hpp"
#include "conic/cone.hpp"
#include "conic/conic_set.hpp"
#include "conic/extended_real.hpp"
#include "conic/lp.hpp"
#include "conic/norm.hpp"

namespace conic {

/// The class ⟨pos~, neg~⟩. Stored as a representative pair; equality is relational.
struct RadstromElement
{
    ConicSet pos;
    ConicSet neg;
};

namespace detail {

inline void require_same_ambient(const ConicSet& a, const ConicSet& b, const char* what)
{
    if (a.dim() != b.dim() || !(a.ambient() == b.ambient()))
        throw MalformedInput(std::string(what) + ": components do not share the ambient cone");
}

inline void require_same_ambient(const RadstromElement& a, const RadstromElement& b, const char* what)
{
    require_same_ambient(a.pos, a.neg, what);
    require_same_ambient(b.pos, b.neg, what);
    require_same_ambient(a.pos, b.pos, what);
}

/// d(x, conv(points) + cone(rays)) in Linf or L1, one LP.
inline Rational distance_to_vrep(const RVector& x, const SetVRep& v, NormKind norm)
{
    const std::size_t d = x.size();
    const std::size_t np = v.points.size(), nr = v.rays.size();
    const std::size_t naux = norm == NormKind::Linf ? 1 : d;
    const std::size_t nv = np + nr + naux;
    LinearProgram lp(nv);
    for (std::size_t a = 0; a < naux; ++a)
        lp.objective[np + nr + a] = 1;
    for (std::size_t i = 0; i < d; ++i) {
        RVector up(nv), down(nv);
        for (std::size_t j = 0; j < np; ++j) {
            up[j] = -v.points[j][i];
            down[j] = v.points[j][i];
        }
        for (std::size_t j = 0; j < nr; ++j) {
            up[np + j] = -v.rays[j][i];
            down[np + j] = v.rays[j][i];
        }
        const std::size_t aux = np + nr + (norm == NormKind::Linf ? 0 : i);
        up[aux] = -1;
        down[aux] = -1;
        lp.add_row(std::move(up), RowSense::LessEqual, -x[i]);
        lp.add_row(std::move(down), RowSense::LessEqual, x[i]);
    }
    RVector sum(nv);
    for (std::size_t j = 0; j < np; ++j)
        sum[j] = 1;
    lp.add_row(std::move(sum), RowSense::Equal, Rational(1));
    const LPOutcome r = lp_solve(lp);
    if (r.status != LPStatus::Optimal)
        throw Error("set distance LP did not reach an optimum");
    return r.value;
}

/// e(S1~, S2~) for sets with equal recession cones: the max over generator points of S1.
inline Rational excess(const ConicSet& s1, const ConicSet& s2, NormKind norm)
{
    Rational e(0);
    for (const auto& p : s1.vrep().points)
        e = std::max(e, distance_to_vrep(p, s2.vrep(), norm));
    return e;
}

} // namespace detail

inline ConicSet zero_set(const PolyhedralCone& k) { return ConicSet::finite(k, {zeros(k.dim())}); }

/// φ(Ã) = ⟨Ã, K⟩.
inline RadstromElement rad_embed(const ConicSet& s) { return RadstromElement{s, zero_set(s.ambient())}; }

inline RadstromElement rad_zero(const PolyhedralCone& k) { return RadstromElement{zero_set(k), zero_set(k)}; }

inline RadstromElement rad_add(const RadstromElement& e1, const RadstromElement& e2)
{
    detail::require_same_ambient(e1, e2, "rad_add");
    return RadstromElement{minkowski_add(e1.pos, e2.pos), minkowski_add(e1.neg, e2.neg)};
}

/// λ >= 0 scales both components; λ < 0 swaps them and scales by -λ.
inline RadstromElement rad_scalar_mul(const Rational& lambda, const RadstromElement& e)
{
    if (sgn(lambda) >= 0)
        return RadstromElement{scale(e.pos, lambda), scale(e.neg, lambda)};
    const Rational mu = -lambda;
    return RadstromElement{scale(e.neg, mu), scale(e.pos, mu)};
}

/// ⟨A,B⟩ = ⟨C,D⟩ iff A ⊕ D = B ⊕ C.
inline bool rad_equals(const RadstromElement& e1, const RadstromElement& e2)
{
    detail::require_same_ambient(e1, e2, "rad_equals");
    return set_equals(minkowski_add(e1.pos, e2.neg), minkowski_add(e1.neg, e2.pos));
}

/// ⟨A,B⟩ lies in the ordering cone iff A~ ⊆ B~.
inline bool rad_in_ordering_cone(const RadstromElement& e)
{
    detail::require_same_ambient(e.pos, e.neg, "rad_in_ordering_cone");
    return set_includes(e.pos, e.neg);
}

struct DominanceCriterion
{
    bool all_functionals = false; // m_pos >= m_neg on all of K+
    bool generators_only = false; // m_pos >= m_neg on the generators of K+ only
};

/// The scalarized ordering test: m_pos(f) >= m_neg(f) for f in K+.
inline DominanceCriterion rad_dominance_criterion(const RadstromElement& e)
{
    detail::require_same_ambient(e.pos, e.neg, "rad_dominance_criterion");
    const EquiStarResult r = equi_star_check(e.pos, e.neg, e.pos.ambient().dual());
    return DominanceCriterion{r.inf_dominance, r.generator_dominance};
}

/// p_f(⟨A,B⟩) = |m_A(f) - m_B(f)| for f in K+.
inline Rational rad_seminorm(const RadstromElement& e, const RVector& f)
{
    detail::require_same_ambient(e.pos, e.neg, "rad_seminorm");
    if (f.size() != e.pos.dim())
        throw MalformedInput("rad_seminorm: functional dimension mismatch");
    if (!e.pos.ambient().dual_contains(f))
        throw InvalidProbe("rad_seminorm: functional " + to_string(f) + " is not in K+");
    const MValue a = m_value(e.pos, f), b = m_value(e.neg, f);
    if (a.is_minus_infinity() || b.is_minus_infinity())
        throw PreconditionViolated("rad_seminorm: a component is not dually K-bounded at " + to_string(f));
    return abs(*a.value - *b.value);
}

/// Hausdorff-Pompeiu distance h(pos~, neg~); +infinity when the recession cones differ.
inline ExtendedReal rad_hausdorff(const RadstromElement& e, const NormTag& norm)
{
    detail::require_same_ambient(e.pos, e.neg, "rad_hausdorff");
    if (norm.kind == NormKind::L2approx)
        throw Unsupported("rad_hausdorff: polyhedral norms only (linf, l1)");
    if (!(recession_cone_of(e.pos) == recession_cone_of(e.neg)))
        return ExtendedReal::infinity();
    return ExtendedReal::finite(
        std::max(detail::excess(e.pos, e.neg, norm.kind), detail::excess(e.neg, e.pos, norm.kind)));
}

} // namespace conic
