#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "conic/boundedness.hpp"
#include "conic/cancellation.hpp"
#include "conic/cli/problem.hpp"
#include "conic/cli/report.hpp"
#include "conic/example_suite.hpp"
#include "conic/pareto.hpp"
#include "conic/radstrom.hpp"

namespace conic::cli {

namespace detail {

inline Json boundedness_json(const ConicSet& s, const BoundednessReport& b)
{
    Json j;
    j["k_bounded"] = b.k_bounded;
    j["ell"] = q(b.ell);
    if (!b.divergence.empty()) {
        Json rows = Json::array();
        for (const auto& d : b.divergence)
            rows.push_back({{"index", d.index}, {"distance", q(d.distance)}});
        j["divergence"] = std::move(rows);
    }
    j["dually_k_bounded"] = b.dually_k_bounded;
    Json probes = Json::array();
    for (const auto& p : b.probe_bounds) {
        Json row;
        row["functional"] = q(p.functional);
        row["m"] = p.diverging || p.m.is_minus_infinity() ? Json("-inf") : q(*p.m.value);
        row["argmin"] = q(p.m.argmin);
        if (s.is_family())
            row["trend"] = p.diverging ? "diverging" : p.m.trend;
        probes.push_back(std::move(row));
    }
    j["probes"] = std::move(probes);
    if (b.diverging_functional) {
        j["diverging_functional"] = q(*b.diverging_functional);
        Json vals = Json::array();
        for (const auto& v : b.diverging_values)
            vals.push_back(q(v));
        j["diverging_values"] = std::move(vals);
    }
    j["hyperbolic"] = b.hyperbolic;
    j["pseudo_hyperbolic"] = b.pseudo_hyperbolic;
    j["rec_equals_K"] = b.rec_equals_K;
    if (s.is_polyhedral()) {
        j["recession_cone"] = q(recession_cone_of(s).generators());
        j["barrier_cone"] = q(barrier_cone_of(s).generators());
    }
    j["heuristic"] = b.heuristic;
    if (b.heuristic)
        j["window"] = b.window;
    return j;
}

inline Json check(const std::string& name, bool pass, Report& r)
{
    if (!pass)
        r.failures.push_back("check failed: " + name);
    return {{"check", name}, {"pass", pass}};
}

inline void run_analyze(const ProblemFile& pf, const PolyhedralCone& k, Report& r)
{
    for (const auto& spec : pf.sets) {
        const ConicSet s = build_set(spec, k);
        const BoundednessReport b = classify_boundedness(s, pf.probes, r.options.truncation);
        r.heuristic = r.heuristic || b.heuristic;
        Json j;
        j["kind"] = spec.kind;
        j.update(boundedness_json(s, b));
        r.results[spec.name] = std::move(j);
    }
}

inline void run_distance(const ProblemFile& pf, const PolyhedralCone& k, Report& r)
{
    Json rows = Json::array();
    for (const auto& x : pf.points) {
        const DistanceResult p = cone_distance(x, k, r.options.norm, DistanceMode::Primal);
        const DistanceResult d = cone_distance(x, k, r.options.norm, DistanceMode::Dual);
        rows.push_back({{"point", q(x)},
                        {"distance", q(p.value)},
                        {"nearest", q(p.witness)},
                        {"dual_value", q(d.value)},
                        {"functional", q(d.witness)},
                        {"agree", p.value == d.value}});
        if (p.value != d.value)
            r.failures.push_back("primal and dual distance differ at " + to_string(x));
    }
    r.results["distances"] = std::move(rows);
}

inline void run_cancel(const ProblemFile& pf, const PolyhedralCone& k, Report& r)
{
    const ConicSet a = build_set(*pf.find_set("A"), k), b = build_set(*pf.find_set("B"), k),
                   c = build_set(*pf.find_set("C"), k);
    const CancellationVerdict closed = check_cancellation_closed(a, b, c, k);
    r.results["closed"] = {{"hypothesis", closed.hypothesis_holds},
                           {"conclusion", closed.conclusion_holds},
                           {"counterexample", q(closed.counterexample)}};
    try {
        const InteriorCancellationVerdict in = check_cancellation_interior(a, b, c, k);
        r.results["interior"] = {{"hypothesis", in.hypothesis_holds},
                                 {"hypothesis_slack", q(in.hypothesis_slack)},
                                 {"conclusion", in.conclusion_holds},
                                 {"conclusion_slack", q(in.conclusion_slack)},
                                 {"counterexample", q(in.counterexample)}};
    } catch (const PreconditionViolated& e) {
        r.results["interior"] = {{"skipped", e.what()}};
    }
}

inline void run_radstrom(const ProblemFile& pf, const PolyhedralCone& k, Report& r)
{
    std::vector<RadstromElement> els;
    Json rows = Json::array();
    std::vector<RVector> functionals = k.inequalities();
    for (const auto& f : pf.probes)
        if (!k.dual_contains(f))
            throw InvalidProbe("probe " + to_string(f) + " is not in K+");
    functionals.insert(functionals.end(), pf.probes.begin(), pf.probes.end());
    for (const auto& spec : pf.elements) {
        RadstromElement e{build_set(*pf.find_set(spec.pos), k), build_set(*pf.find_set(spec.neg), k)};
        Json j;
        j["pos"] = spec.pos;
        j["neg"] = spec.neg;
        j["in_ordering_cone"] = rad_in_ordering_cone(e);
        const DominanceCriterion dom = rad_dominance_criterion(e);
        j["dominance_all_functionals"] = dom.all_functionals;
        j["dominance_generators_only"] = dom.generators_only;
        j["hausdorff"] = q(rad_hausdorff(e, r.options.norm));
        Json sn = Json::array();
        for (const auto& f : functionals)
            sn.push_back({{"functional", q(f)}, {"seminorm", q(rad_seminorm(e, f))}});
        j["seminorms"] = std::move(sn);
        rows.push_back(std::move(j));
        els.push_back(std::move(e));
    }
    r.results["elements"] = std::move(rows);
    if (els.size() > 1) {
        Json eq = Json::array();
        for (std::size_t i = 0; i < els.size(); ++i)
            for (std::size_t j = i + 1; j < els.size(); ++j)
                eq.push_back({{"first", i}, {"second", j}, {"equal", rad_equals(els[i], els[j])}});
        r.results["equalities"] = std::move(eq);
        RadstromElement sum = els[0];
        for (std::size_t i = 1; i < els.size(); ++i)
            sum = rad_add(sum, els[i]);
        r.results["sum"] = {{"pos", q(sum.pos.vrep().points)}, {"neg", q(sum.neg.vrep().points)}};
    }
}

inline void run_pareto(const ProblemFile& pf, const PolyhedralCone& k, Report& r)
{
    const std::vector<RVector>& a = pf.find_set("A")->points;
    const ParetoReport p = pareto_report(a, k);
    r.results["pareto_points"] = q(p.pareto_points);
    r.results["weak_pareto_points"] = q(p.weak_pareto_points);
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.weak_pareto_points.size(); ++i) {
        const auto it = p.scalarization_witnesses.find(i);
        rows.push_back({{"point", q(p.weak_pareto_points[i])},
                        {"witness", it == p.scalarization_witnesses.end() ? Json(nullptr) : q(it->second)}});
    }
    r.results["scalarization"] = std::move(rows);
}

// ---- examples ----

inline void example_c0(Report& r)
{
    const std::size_t n = std::max<std::size_t>(r.options.truncation, 3);
    const examples::C0Result c = examples::run_c0_family(n, r.options.truncation);
    r.heuristic = c.report.heuristic;
    Json rows = Json::array();
    for (std::size_t i = 0; i < c.distances.size(); ++i)
        rows.push_back({{"k", c.distances[i].index},
                        {"distance", q(c.distances[i].distance)},
                        {"probe_value", q(c.probe_values[i])}});
    r.results["dimension"] = n;
    r.results["probe"] = "(2^-1, ..., 2^-" + std::to_string(n) + ")";
    r.results["elements"] = std::move(rows);
    r.results["classification"] = boundedness_json(ConicSet::family(PolyhedralCone::nonnegative_orthant(n),
                                                                    examples::c0_family_table(n)),
                                                   c.report);
    Json checks = Json::array();
    checks.push_back(check("d(a^(k), K) = k for every k", c.distances_match_index, r));
    checks.push_back(check("primal and dual distances agree", c.distances_match_dual, r));
    checks.push_back(check("x*(a^(k)) >= (k^2 - k)/2 for every k", c.probe_lower_bound, r));
    checks.push_back(check("x*(a^(1)) = 1/4", c.probe_values.front() == Rational(1, 4), r));
    checks.push_back(check("not K-bounded", !c.report.k_bounded, r));
    checks.push_back(check("dually K-bounded (heuristic)", c.report.dually_k_bounded && c.report.heuristic, r));
    r.results["checks"] = std::move(checks);
}

inline void example_ice_cream(Report& r)
{
    r.exact = false;
    Json rows = Json::array();
    bool close = true;
    for (unsigned n = 1; n <= 20; ++n) {
        const double d = examples::ice_cream_distance(n), want = n * std::sqrt(0.5);
        close = close && std::abs(d - want) <= 1e-9;
        rows.push_back({{"n", n}, {"distance", d}, {"n_over_sqrt2", want}, {"error", std::abs(d - want)}});
    }
    r.results["approx"] = {{"tolerance", 1e-9}};
    r.results["distances"] = std::move(rows);
    Json signs = Json::array();
    bool verified = true;
    for (const auto& u : examples::ice_cream_samples(r.options.seed)) {
        const examples::EventualSign e = examples::eventual_sign(u);
        verified = verified && e.verified;
        signs.push_back({{"u", q(u)}, {"n_u", e.n_u}, {"verified", e.verified}});
    }
    r.results["eventual_sign"] = std::move(signs);
    Json approx = Json::array();
    const double want = 10 * std::sqrt(0.5);
    for (unsigned m : {8U, 32U, 128U}) {
        const double d = examples::polyhedral_euclidean_distance(examples::ice_cream_point(10), examples::inscribed_cone(m));
        approx.push_back({{"facets", m}, {"distance_at_n10", d}, {"relative_error", std::abs(d - want) / want}});
    }
    r.results["inscribed_polyhedral_cones"] = std::move(approx);
    Json checks = Json::array();
    checks.push_back(check("|d(x_n, K) - n/sqrt(2)| <= 1e-9 for n <= 20", close, r));
    checks.push_back(check("<u, x_n> >= 0 for n >= n_u", verified, r));
    r.results["checks"] = std::move(checks);
}

inline void example_hyperbola(Report& r)
{
    r.exact = false;
    const ConicSet s = ConicSet::finite(PolyhedralCone::nonnegative_orthant(2), examples::hyperbola_samples());
    const Rational m11 = *m_value(s, {Rational(1), Rational(1)}).value;
    r.results["samples"] = s.sample_points().size();
    r.results["m_at_1_1"] = q(m11);
    const std::vector<Rational> grid{Rational(1, 5), Rational(1, 2), Rational(1), Rational(3), Rational(7)};
    Json rows = Json::array();
    double worst = 0;
    for (const auto& a : grid)
        for (const auto& b : grid) {
            const double sampled = m_value(s, {a, b}).value->get_d();
            const double exact = examples::hyperbola_m(a.get_d(), b.get_d());
            worst = std::max(worst, std::abs(sampled - exact));
            rows.push_back({{"a", q(a)}, {"b", q(b)}, {"m_sampled", sampled}, {"two_sqrt_ab", exact}, {"error", std::abs(sampled - exact)}});
        }
    r.results["approx"] = {{"tolerance", 1e-3}};
    r.results["grid"] = std::move(rows);
    Json lip = Json::array();
    bool lip_ok = true;
    for (double n : {1.0, 10.0, 100.0, 1e4}) {
        const double ratio = examples::hyperbola_lipschitz_ratio(n);
        lip_ok = lip_ok && std::abs(ratio - 2 * std::sqrt(n)) <= 1e-6;
        lip.push_back({{"n", n}, {"ratio", ratio}, {"two_sqrt_n", 2 * std::sqrt(n)}});
    }
    r.results["lipschitz_failure"] = std::move(lip);
    Json checks = Json::array();
    checks.push_back(check("m(1,1) = 2", m11 == 2, r));
    checks.push_back(check("sampled m within 1e-3 of 2 sqrt(ab)", worst <= 1e-3, r));
    checks.push_back(check("ratio = 2 sqrt(n) within 1e-6", lip_ok, r));
    r.results["checks"] = std::move(checks);
}

inline void example_c00(Report& r)
{
    r.exact = false;
    Json sections = Json::array();
    bool negative = true, close = true, shrinking = true;
    for (unsigned n_trunc : {4U, 16U, 64U}) {
        const auto rows = examples::openness_rows(n_trunc);
        double prev = 2.0;
        for (const auto& row : rows) {
            negative = negative && row.pairing < 0;
            close = close && std::abs(row.pairing - row.expected) <= 1e-12;
            shrinking = shrinking && row.gap < prev && std::abs(row.gap - std::sqrt(1.0 / row.n)) <= 1e-12;
            prev = row.gap;
        }
        const auto& last = rows.back();
        sections.push_back({{"truncation", n_trunc},
                            {"rows", rows.size()},
                            {"last_pairing", last.pairing},
                            {"last_gap", last.gap}});
    }
    r.results["approx"] = {{"tolerance", 1e-12}};
    r.results["truncations"] = std::move(sections);
    if (r.options.verbose) {
        Json rows = Json::array();
        for (const auto& row : examples::openness_rows(16))
            rows.push_back({{"n", row.n}, {"pairing", row.pairing}, {"one_minus_sqrt_n", row.expected}, {"gap", row.gap}});
        r.results["rows_at_16"] = std::move(rows);
    }
    Json checks = Json::array();
    checks.push_back(check("(e1* + x_n*)(x_n) < 0 for 2 <= n <= N", negative, r));
    checks.push_back(check("(e1* + x_n*)(x_n) = 1 - sqrt(n) within 1e-12", close, r));
    checks.push_back(check("||x_n - x|| = sqrt(1/n), strictly decreasing", shrinking, r));
    r.results["checks"] = std::move(checks);
}

} // namespace detail

inline Report run_example(const std::string& name, const Options& opt)
{
    Report r;
    r.task = "example";
    r.source = name;
    r.options = opt;
    if (name == "c0-family")
        detail::example_c0(r);
    else if (name == "ice-cream")
        detail::example_ice_cream(r);
    else if (name == "hyperbola")
        detail::example_hyperbola(r);
    else if (name == "c00-open")
        detail::example_c00(r);
    else
        throw MalformedInput("unknown example \"" + name + "\" (expected " + detail::joined(example_names()) + ")");
    return r;
}

/**
 * Runs one problem. Input errors propagate as MalformedInput; analysis errors
 * (preconditions, invalid probes, unsupported norms) propagate as the library
 * raised them.
 */
inline Report run_problem(const ProblemFile& pf, const Options& opt, const std::string& source = {})
{
    if (pf.task == "example") {
        Report r = run_example(pf.example, opt);
        r.source = source.empty() ? pf.example : source;
        return r;
    }
    Report r;
    r.task = pf.task;
    r.source = source;
    r.options = opt;
    const PolyhedralCone k = build_cone(pf);
    if (pf.task == "analyze")
        detail::run_analyze(pf, k, r);
    else if (pf.task == "distance")
        detail::run_distance(pf, k, r);
    else if (pf.task == "cancel")
        detail::run_cancel(pf, k, r);
    else if (pf.task == "radstrom")
        detail::run_radstrom(pf, k, r);
    else
        detail::run_pareto(pf, k, r);
    return r;
}

} // namespace conic::cli
