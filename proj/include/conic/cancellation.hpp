#pragma once

#include <optional>
#include <vector>

#include "conic/cone.hpp"
#include "conic/conic_set.hpp"
#include "conic/extended_real.hpp"
#include "conic/lp.hpp"

namespace conic {

struct CancellationVerdict
{
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    std::optional<RVector> counterexample; // point of Ã outside the conclusion's right-hand side
};

struct InteriorCancellationVerdict : CancellationVerdict
{
    ExtendedReal hypothesis_slack; // min over generators of the best interior slack
    ExtendedReal conclusion_slack;
};

namespace detail {

inline void require_same_space(const std::vector<const ConicSet*>& sets, const PolyhedralCone& k)
{
    for (const ConicSet* s : sets) {
        if (s->dim() != k.dim())
            throw MalformedInput("cancellation: set of dimension " + std::to_string(s->dim()) + " with a cone in dimension "
                                 + std::to_string(k.dim()));
        s->require_polyhedral("cancellation");
    }
}

inline bool dually_bounded_polyhedral(const ConicSet& s)
{
    return s.is_finite() || recession_cone_of(s) == s.ambient();
}

/**
 * max s such that x = sum λ_j q_j + k with λ in the simplex and a·k >= s for
 * every inequality normal a of K. Infinite when K has no inequalities; absent
 * (nullopt) when no such decomposition exists at all.
 */
inline std::optional<ExtendedReal> interior_slack(const RVector& x, const std::vector<RVector>& targets,
                                                  const PolyhedralCone& k)
{
    const auto& normals = k.inequalities();
    if (normals.empty())
        return ExtendedReal::infinity();
    const std::size_t nq = targets.size();
    // variables: λ (nq, >= 0), s (free, encoded as s+ - s-)
    LinearProgram lp(nq + 2);
    lp.objective[nq] = -1;
    lp.objective[nq + 1] = 1;
    for (const auto& a : normals) {
        // a·(x - sum λ q) - s >= 0
        RVector row(nq + 2);
        for (std::size_t j = 0; j < nq; ++j)
            row[j] = -dot(a, targets[j]);
        row[nq] = -1;
        row[nq + 1] = 1;
        lp.add_row(std::move(row), RowSense::GreaterEqual, -dot(a, x));
    }
    RVector sum(nq + 2);
    for (std::size_t j = 0; j < nq; ++j)
        sum[j] = 1;
    lp.add_row(std::move(sum), RowSense::Equal, Rational(1));
    const LPOutcome r = lp_solve(lp);
    if (r.status == LPStatus::Infeasible)
        return std::nullopt;
    if (r.status == LPStatus::Unbounded)
        return ExtendedReal::infinity();
    return ExtendedReal::finite(-r.value);
}

inline bool positive(const std::optional<ExtendedReal>& s)
{
    return s && (s->is_infinite() || sgn(*s->value) > 0);
}

inline ExtendedReal min_slack(const std::vector<RVector>& points, const std::vector<RVector>& targets,
                              const PolyhedralCone& k, std::optional<RVector>* failing)
{
    ExtendedReal worst = ExtendedReal::infinity();
    for (const auto& p : points) {
        const auto s = interior_slack(p, targets, k);
        const ExtendedReal v = s ? *s : ExtendedReal::finite(Rational(-1));
        if (!v.is_infinite() && (worst.is_infinite() || *v.value < *worst.value)) {
            worst = v;
            if (failing && sgn(*v.value) <= 0 && !failing->has_value())
                *failing = p;
        }
    }
    return worst;
}

inline bool m_at_least(const MValue& a, const MValue& b)
{
    if (b.is_minus_infinity())
        return true;
    if (a.is_minus_infinity())
        return false;
    return *a.value >= *b.value;
}

} // namespace detail

/// Ã ⊕ C̃ ⊆ C̃ ⊕ B̃ (hypothesis) against Ã ⊆ B̃ (conclusion), all over the cone K.
inline CancellationVerdict check_cancellation_closed(const ConicSet& a, const ConicSet& b, const ConicSet& c,
                                                     const PolyhedralCone& k)
{
    detail::require_same_space({&a, &b, &c}, k);
    const ConicSet ak = a.with_ambient(k), bk = b.with_ambient(k), ck = c.with_ambient(k);
    CancellationVerdict v;
    v.hypothesis_holds = set_includes(minkowski_add(ak, ck), minkowski_add(ck, bk));
    v.counterexample = find_uncovered(ak, bk);
    v.conclusion_holds = !v.counterexample.has_value();
    return v;
}

/**
 * A + C ⊆ C + B + int K (hypothesis) against A ⊆ B + int K (conclusion).
 * Each generator point is tested by a max-slack LP; membership in the open
 * set means slack > 0 exactly.
 */
inline InteriorCancellationVerdict check_cancellation_interior(const ConicSet& a, const ConicSet& b, const ConicSet& c,
                                                               const PolyhedralCone& k)
{
    detail::require_same_space({&a, &b, &c}, k);
    if (!k.has_interior())
        throw PreconditionViolated("interior cancellation needs a cone with nonempty interior");
    const ConicSet ak = a.with_ambient(k), bk = b.with_ambient(k), ck = c.with_ambient(k);
    if (!detail::dually_bounded_polyhedral(ak) || !detail::dually_bounded_polyhedral(ck))
        throw PreconditionViolated("interior cancellation needs A and C dually K-bounded");
    InteriorCancellationVerdict v;
    const ConicSet ac = minkowski_add(ak, ck);
    const ConicSet cb = minkowski_add(ck, bk);
    v.hypothesis_slack = detail::min_slack(ac.vrep().points, cb.vrep().points, k, nullptr);
    v.hypothesis_holds = detail::positive(v.hypothesis_slack);
    std::optional<RVector> failing;
    v.conclusion_slack = detail::min_slack(ak.vrep().points, bk.vrep().points, k, &failing);
    v.conclusion_holds = detail::positive(v.conclusion_slack);
    if (!v.conclusion_holds)
        v.counterexample = failing;
    return v;
}

struct EquiStarResult
{
    bool inf_dominance = false;       // m_A(f) >= m_B(f) over every f in E (decided on a finite sufficient family)
    bool inclusion = false;           // Ã ⊆ B̃ with ambient cone E+
    bool generator_dominance = false; // m_A(f) >= m_B(f) on the generators of E only
};

/**
 * m-dominance over the dual-side cone E against inclusion over E+.
 *
 * Dominance over all of E is decided on the generators of E together with the
 * facet normals of B̃ (every such normal lies in E): dominance on the facet
 * normals already forces Ã into every facet halfspace of B̃.
 */
inline EquiStarResult equi_star_check(const ConicSet& a, const ConicSet& b, const PolyhedralCone& e)
{
    if (a.dim() != e.dim() || b.dim() != e.dim())
        throw MalformedInput("equi_star_check: dimension mismatch");
    const PolyhedralCone ep = e.dual();
    const ConicSet a2 = a.with_ambient(ep), b2 = b.with_ambient(ep);
    EquiStarResult r;
    r.inclusion = set_includes(a2, b2);
    r.generator_dominance = true;
    for (const auto& f : e.generators())
        if (!detail::m_at_least(m_value(a2, f), m_value(b2, f)))
            r.generator_dominance = false;
    r.inf_dominance = r.generator_dominance;
    for (const auto& h : hrep_of(b2))
        if (!detail::m_at_least(m_value(a2, h.normal), m_value(b2, h.normal)))
            r.inf_dominance = false;
    return r;
}

struct EquivPh2Result
{
    bool lhs = false; // Ã ⊕ C̃ ⊆ B̃ ⊕ C̃
    bool rhs = false; // Ã ⊆ B + rec C̃
};

inline EquivPh2Result equiv_ph2_check(const ConicSet& a, const ConicSet& b, const ConicSet& c)
{
    detail::require_same_space({&a, &b, &c}, c.ambient());
    EquivPh2Result r;
    r.lhs = set_includes(minkowski_add(a, c), minkowski_add(b, c));
    r.rhs = set_includes(a, b.with_ambient(recession_cone_of(c)));
    return r;
}

struct ConverseInstanceResult
{
    bool lhs = false;            // (rec C̃) ⊕ C̃ ⊆ {0} ⊕ C̃
    bool cancels = false;        // rec C̃ ⊆ K, i.e. the cancelled inclusion A ⊆ B̃ holds
    bool dually_bounded = false; // C dually K-bounded (rec C̃ = K for polyhedral C)
};

/// The constructive instance A = rec C̃, B = {0} behind the converse of the cancellation law.
inline ConverseInstanceResult converse_instance_check(const ConicSet& c)
{
    c.require_polyhedral("converse instance");
    const PolyhedralCone& k = c.ambient();
    const PolyhedralCone rec = recession_cone_of(c);
    const ConicSet a = ConicSet::hpoly(k, rec.inequalities(), zeros(rec.inequalities().size()));
    const ConicSet b = ConicSet::finite(k, {zeros(k.dim())});
    ConverseInstanceResult r;
    r.lhs = equiv_ph2_check(a, b, c).lhs;
    r.cancels = set_includes(a, b);
    r.dually_bounded = detail::dually_bounded_polyhedral(c);
    return r;
}

} // namespace conic
