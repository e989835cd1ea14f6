#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conic/rational.hpp"

/**
 * Exact two-phase primal simplex over the rationals.
 *
 * Pivoting follows Bland's rule (smallest eligible entering index, ties in the
 * ratio test broken by smallest basic index), which guarantees termination on
 * degenerate problems. All arithmetic is exact, so the returned status and
 * value carry no tolerance.
 */
namespace conic {

enum class RowSense { LessEqual, Equal, GreaterEqual };
enum class VarBound { Free, NonNegative };
enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LPStatus s)
{
    switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
    }
    return "?";
}

/// minimize objective·x subject to rows[i]·x (sense) rhs[i] and per-variable bounds.
struct LinearProgram
{
    RVector objective;
    std::vector<RVector> rows;
    RVector rhs;
    std::vector<RowSense> senses;
    std::vector<VarBound> bounds;

    LinearProgram() = default;
    explicit LinearProgram(std::size_t num_vars, VarBound bound = VarBound::NonNegative)
        : objective(num_vars, Rational(0)), bounds(num_vars, bound)
    {
    }

    std::size_t num_vars() const { return objective.size(); }

    void add_row(RVector coeffs, RowSense sense, Rational b)
    {
        rows.push_back(std::move(coeffs));
        senses.push_back(sense);
        rhs.push_back(std::move(b));
    }
};

struct LPOutcome
{
    LPStatus status = LPStatus::Infeasible;
    Rational value;  ///< meaningful iff status == Optimal
    RVector witness; ///< optimal point, or an improving ray when unbounded
};

namespace detail {

class SimplexTableau
{
  public:
    // Rows hold n structural entries followed by the right-hand side.
    std::vector<RVector> rows;
    std::vector<std::size_t> basis;
    RVector phase1_cost; // reduced costs, last entry = -objective
    RVector phase2_cost;
    std::vector<bool> forbidden;
    std::size_t n = 0;

    void pivot(std::size_t r, std::size_t s)
    {
        RVector& prow = rows[r];
        const Rational piv = prow[s];
        std::vector<std::size_t> nz;
        nz.reserve(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] /= piv;
                nz.push_back(j);
            }
        }
        Rational t;
        auto eliminate = [&](RVector& row) {
            if (sgn(row[s]) == 0)
                return;
            const Rational f = row[s];
            for (std::size_t j : nz) {
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), prow[j].get_mpq_t());
                row[j] -= t;
            }
        };
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r)
                eliminate(rows[i]);
        if (!phase1_cost.empty())
            eliminate(phase1_cost);
        eliminate(phase2_cost);
        basis[r] = s;
    }

    // Returns false when the entering column admits no leaving row (unbounded).
    // `entering` receives the chosen column or n when the current basis is optimal.
    bool iterate(const RVector& cost, std::size_t& entering)
    {
        entering = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!forbidden[j] && sgn(cost[j]) < 0) {
                entering = j;
                break;
            }
        }
        if (entering == n)
            return true;
        const std::size_t s = entering;
        std::optional<std::size_t> leave;
        Rational lhs, rhs;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (sgn(rows[i][s]) <= 0)
                continue;
            if (!leave) {
                leave = i;
                continue;
            }
            // compare b_i / a_is against b_l / a_ls without dividing
            const std::size_t l = *leave;
            mpq_mul(lhs.get_mpq_t(), rows[i][n].get_mpq_t(), rows[l][s].get_mpq_t());
            mpq_mul(rhs.get_mpq_t(), rows[l][n].get_mpq_t(), rows[i][s].get_mpq_t());
            const int c = cmp(lhs, rhs);
            if (c < 0 || (c == 0 && basis[i] < basis[l]))
                leave = i;
        }
        if (!leave)
            return false;
        pivot(*leave, s);
        return true;
    }
};

} // namespace detail

inline void validate(const LinearProgram& lp)
{
    const std::size_t nv = lp.objective.size();
    if (lp.bounds.size() != nv)
        throw MalformedInput("linear program: bounds length " + std::to_string(lp.bounds.size())
                             + " differs from objective dimension " + std::to_string(nv));
    if (lp.rhs.size() != lp.rows.size() || lp.senses.size() != lp.rows.size())
        throw MalformedInput("linear program: rows, rhs and senses differ in length");
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
        if (lp.rows[i].size() != nv)
            throw MalformedInput("linear program: row " + std::to_string(i) + " has dimension "
                                 + std::to_string(lp.rows[i].size()) + ", expected " + std::to_string(nv));
}

inline LPOutcome lp_solve(const LinearProgram& lp)
{
    validate(lp);
    const std::size_t nv = lp.num_vars();
    const std::size_t m = lp.rows.size();

    // Column layout: structural plus/minus parts, slacks, artificials.
    std::vector<std::size_t> plus_col(nv), minus_col(nv, static_cast<std::size_t>(-1));
    std::size_t n = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        plus_col[j] = n++;
        if (lp.bounds[j] == VarBound::Free)
            minus_col[j] = n++;
    }
    std::vector<std::size_t> slack_col(m, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < m; ++i)
        if (lp.senses[i] != RowSense::Equal)
            slack_col[i] = n++;

    // Decide which rows need an artificial variable.
    std::vector<bool> flip(m), needs_art(m);
    std::size_t num_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        flip[i] = sgn(lp.rhs[i]) < 0;
        int slack_sign = 0;
        if (lp.senses[i] == RowSense::LessEqual)
            slack_sign = 1;
        else if (lp.senses[i] == RowSense::GreaterEqual)
            slack_sign = -1;
        if (flip[i])
            slack_sign = -slack_sign;
        needs_art[i] = slack_sign != 1;
        if (needs_art[i])
            ++num_art;
    }
    const std::size_t first_art = n;
    n += num_art;

    detail::SimplexTableau tab;
    tab.n = n;
    tab.rows.assign(m, RVector(n + 1, Rational(0)));
    tab.basis.assign(m, 0);
    tab.forbidden.assign(n, false);
    std::size_t art = first_art;
    for (std::size_t i = 0; i < m; ++i) {
        RVector& row = tab.rows[i];
        const int sign = flip[i] ? -1 : 1;
        for (std::size_t j = 0; j < nv; ++j) {
            if (sgn(lp.rows[i][j]) == 0)
                continue;
            row[plus_col[j]] = sign * lp.rows[i][j];
            if (minus_col[j] != static_cast<std::size_t>(-1))
                row[minus_col[j]] = -sign * lp.rows[i][j];
        }
        if (slack_col[i] != static_cast<std::size_t>(-1))
            row[slack_col[i]] = (lp.senses[i] == RowSense::LessEqual ? 1 : -1) * sign;
        row[n] = sign * lp.rhs[i];
        if (needs_art[i]) {
            row[art] = 1;
            tab.basis[i] = art++;
        } else {
            tab.basis[i] = slack_col[i];
        }
    }

    tab.phase2_cost.assign(n + 1, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) {
        tab.phase2_cost[plus_col[j]] = lp.objective[j];
        if (minus_col[j] != static_cast<std::size_t>(-1))
            tab.phase2_cost[minus_col[j]] = -lp.objective[j];
    }

    std::size_t entering = 0;
    if (num_art > 0) {
        tab.phase1_cost.assign(n + 1, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (!needs_art[i])
                continue;
            for (std::size_t j = 0; j < first_art; ++j)
                tab.phase1_cost[j] -= tab.rows[i][j];
            tab.phase1_cost[n] -= tab.rows[i][n];
        }
        // Phase 1 objective is bounded below by zero, so iterate never reports unbounded.
        while (true) {
            tab.iterate(tab.phase1_cost, entering);
            if (entering == n)
                break;
        }
        if (sgn(tab.phase1_cost[n]) != 0)
            return LPOutcome{LPStatus::Infeasible, Rational(0), {}};

        // Drive remaining (zero-valued) artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < tab.rows.size();) {
            if (tab.basis[i] < first_art) {
                ++i;
                continue;
            }
            std::size_t col = first_art;
            for (std::size_t j = 0; j < first_art; ++j) {
                if (sgn(tab.rows[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col < first_art) {
                tab.pivot(i, col);
                ++i;
            } else {
                tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
                tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (std::size_t j = first_art; j < n; ++j)
            tab.forbidden[j] = true;
        tab.phase1_cost.clear();
    }

    while (true) {
        if (!tab.iterate(tab.phase2_cost, entering)) {
            RVector dir(n, Rational(0));
            dir[entering] = 1;
            for (std::size_t i = 0; i < tab.rows.size(); ++i)
                dir[tab.basis[i]] = -tab.rows[i][entering];
            RVector ray(nv);
            for (std::size_t j = 0; j < nv; ++j) {
                ray[j] = dir[plus_col[j]];
                if (minus_col[j] != static_cast<std::size_t>(-1))
                    ray[j] -= dir[minus_col[j]];
            }
            return LPOutcome{LPStatus::Unbounded, Rational(0), std::move(ray)};
        }
        if (entering == n)
            break;
    }

    RVector xs(n, Rational(0));
    for (std::size_t i = 0; i < tab.rows.size(); ++i)
        xs[tab.basis[i]] = tab.rows[i][n];
    RVector x(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        x[j] = xs[plus_col[j]];
        if (minus_col[j] != static_cast<std::size_t>(-1))
            x[j] -= xs[minus_col[j]];
    }
    Rational value = dot(lp.objective, x);
    return LPOutcome{LPStatus::Optimal, std::move(value), std::move(x)};
}

/// Checks a claimed solution against every constraint, exactly.
inline bool is_feasible_point(const LinearProgram& lp, const RVector& x)
{
    if (x.size() != lp.num_vars())
        return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (lp.bounds[j] == VarBound::NonNegative && sgn(x[j]) < 0)
            return false;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const Rational lhs = dot(lp.rows[i], x);
        switch (lp.senses[i]) {
        case RowSense::LessEqual:
            if (lhs > lp.rhs[i])
                return false;
            break;
        case RowSense::GreaterEqual:
            if (lhs < lp.rhs[i])
                return false;
            break;
        case RowSense::Equal:
            if (lhs != lp.rhs[i])
                return false;
            break;
        }
    }
    return true;
}

/// A ray certifying unboundedness: homogeneous feasibility plus strictly improving objective.
inline bool is_improving_ray(const LinearProgram& lp, const RVector& d)
{
    if (d.size() != lp.num_vars())
        return false;
    for (std::size_t j = 0; j < d.size(); ++j)
        if (lp.bounds[j] == VarBound::NonNegative && sgn(d[j]) < 0)
            return false;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const int s = sgn(dot(lp.rows[i], d));
        if ((lp.senses[i] == RowSense::LessEqual && s > 0) || (lp.senses[i] == RowSense::GreaterEqual && s < 0)
            || (lp.senses[i] == RowSense::Equal && s != 0))
            return false;
    }
    return sgn(dot(lp.objective, d)) < 0;
}

} // namespace conic
