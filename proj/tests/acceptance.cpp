// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "conic/boundedness.hpp"
#include "conic/cancellation.hpp"
#include "conic/example_suite.hpp"
#include "conic/pareto.hpp"
#include "conic/radstrom.hpp"
#include "conic/random_instances.hpp"

using namespace conic;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
    std::vector<std::string> info;
};

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

PolyhedralCone orthant(std::size_t d) { return PolyhedralCone::nonnegative_orthant(d); }

// ---- 1 ----
Outcome duality_formula()
{
    InstanceGenerator gen(1001);
    int agree = 0, total = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 1 + gen.index(5);
        const auto k = gen.cone(dim, 1 + gen.index(8));
        const RVector x = gen.vector(dim, 5, 3);
        for (auto norm : {NormTag::linf(), NormTag::l1()}) {
            const auto p = cone_distance(x, k, norm, DistanceMode::Primal);
            const auto d = cone_distance(x, k, norm, DistanceMode::Dual);
            ++total;
            agree += p.value == d.value;
        }
    }
    return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " exact primal = dual", {}};
}

// ---- 2 ----
Outcome c0_family()
{
    const auto c = examples::run_c0_family(64, 64);
    const bool first = c.probe_values.front() == Rational(1, 4);
    const bool flags = !c.report.k_bounded && c.report.dually_k_bounded && c.report.heuristic;
    std::ostringstream s;
    s << "d(a^(k),K)=k for k<=" << c.distances.size() << ": " << (c.distances_match_index ? "yes" : "no")
      << "; x*(a^(k))>=(k^2-k)/2: " << (c.probe_lower_bound ? "yes" : "no") << "; x*(a^(1))=" << c.probe_values.front()
      << "; k_bounded=" << c.report.k_bounded << " dually=" << c.report.dually_k_bounded << " (heuristic)";
    return {c.distances_match_index && c.probe_lower_bound && first && flags, s.str(), {}};
}

// ---- 3 ----
Outcome ice_cream()
{
    double worst = 0;
    for (unsigned n = 1; n <= 20; ++n)
        worst = std::max(worst, std::abs(examples::ice_cream_distance(n) - n * std::sqrt(0.5)));
    bool signs = true;
    std::string nus;
    for (const auto& u : examples::ice_cream_samples(1)) {
        const auto e = examples::eventual_sign(u);
        signs = signs && e.verified;
        nus += (nus.empty() ? "" : ",") + std::to_string(e.n_u);
    }
    const double want = 10 * std::sqrt(0.5);
    bool approx = true;
    std::string errs;
    const std::vector<std::pair<unsigned, double>> targets{{8, 0.05}, {32, 0.01}, {128, 0.0025}};
    for (const auto& [m, tol] : targets) {
        const double d = examples::polyhedral_euclidean_distance(examples::ice_cream_point(10), examples::inscribed_cone(m));
        const double rel = std::abs(d - want) / want;
        approx = approx && rel <= tol;
        errs += " m=" + std::to_string(m) + ":" + fmt("%.4g%%", 100 * rel) + (rel <= tol ? "" : fmt("(>%g%%)", 100 * tol));
    }
    std::string detail = "analytic max err " + fmt("%.2e", worst) + "; n_u=" + nus + (signs ? " verified" : " NOT verified")
                         + "; m-facet rel. err at n=10:" + errs;
    return {worst <= 1e-9 && signs && approx, detail, {}};
}

// ---- 4 ----
Outcome hyperbola()
{
    const ConicSet s = ConicSet::finite(orthant(2), examples::hyperbola_samples());
    const bool m11 = *m_value(s, {Rational(1), Rational(1)}).value == 2;
    const std::vector<Rational> grid{Rational(1, 5), Rational(1, 2), Rational(1), Rational(3), Rational(7)};
    double worst = 0;
    for (const auto& a : grid)
        for (const auto& b : grid)
            worst = std::max(worst, std::abs(m_value(s, {a, b}).value->get_d() - examples::hyperbola_m(a.get_d(), b.get_d())));
    double lip = 0;
    for (double n : {1.0, 10.0, 100.0, 1e4})
        lip = std::max(lip, std::abs(examples::hyperbola_lipschitz_ratio(n) - 2 * std::sqrt(n)));
    return {m11 && worst <= 1e-3 && lip <= 1e-6,
            std::string("m(1,1)=2 exact: ") + (m11 ? "yes" : "no") + "; grid max err " + fmt("%.2e", worst)
                + "; Lipschitz ratio max err " + fmt("%.2e", lip),
            {}};
}

// ---- 5 ----
Outcome cancellation_soundness()
{
    InstanceGenerator gen(1005);
    int violations = 0, not_hyp = 0;
    for (int i = 0; i < 500; ++i) {
        const auto t = random_hypothesis_triple(gen);
        const auto r = check_cancellation_closed(t.a, t.b, t.c, t.k);
        not_hyp += !r.hypothesis_holds;
        violations += !r.conclusion_holds;
    }
    int hyp = 0, random_violations = 0;
    for (int i = 0; i < 500; ++i) {
        const auto t = random_triple(gen);
        const auto r = check_cancellation_closed(t.a, t.b, t.c, t.k);
        hyp += r.hypothesis_holds;
        random_violations += r.hypothesis_holds && !r.conclusion_holds;
    }
    std::ostringstream s;
    s << "constructed: " << violations << " violations / 500 (hypothesis confirmed in " << 500 - not_hyp
      << "); random: " << random_violations << " violations, hypothesis true in " << hyp << "/500";
    return {violations == 0 && not_hyp == 0 && random_violations == 0, s.str(), {}};
}

// ---- 6 ----
Outcome equivalences()
{
    InstanceGenerator gen(1006);
    int eq1 = 0, true1 = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 1 + gen.index(3);
        const auto e = gen.cone(dim, 1 + gen.index(4));
        const auto a = ConicSet::finite(e.dual(), gen.points(1 + gen.index(3), dim, 3));
        const auto b = ConicSet::finite(e.dual(), gen.points(1 + gen.index(3), dim, 3));
        const auto r = equi_star_check(a, b, e);
        eq1 += r.inf_dominance == r.inclusion;
        true1 += r.inclusion;
    }
    int eq2 = 0, true2 = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 1 + gen.index(3);
        const auto k = gen.cone(dim, 1 + gen.index(3));
        const auto a = ConicSet::finite(k, gen.points(1 + gen.index(3), dim, 3));
        const auto b = ConicSet::finite(k, gen.points(1 + gen.index(3), dim, 3));
        const ConicSet c = gen.coin() ? ConicSet::finite(k, gen.points(1 + gen.index(3), dim, 3))
                                      : ConicSet::hpoly(k, {gen.nonzero_vector(dim, 2)}, {gen.rational(3)});
        const auto r = equiv_ph2_check(a, b, c);
        eq2 += r.lhs == r.rhs;
        true2 += r.lhs;
    }
    std::ostringstream s;
    s << "inf-dominance = inclusion " << eq1 << "/200 (true in " << true1 << "); tilde inclusion pair " << eq2
      << "/200 (true in " << true2 << ")";
    return {eq1 == 200 && eq2 == 200, s.str(), {}};
}

// ---- 7 ----
RadstromElement random_element(InstanceGenerator& gen, const PolyhedralCone& k)
{
    const std::size_t d = k.dim();
    return {ConicSet::finite(k, gen.points(1 + gen.index(3), d, 3)), ConicSet::finite(k, gen.points(1 + gen.index(3), d, 3))};
}

Outcome radstrom_algebra()
{
    InstanceGenerator gen(1007);
    const std::vector<Rational> lambdas{Rational(0), Rational(1, 2), Rational(1), Rational(3), Rational(-2), Rational(-1, 3)};
    auto pick = [&] { return lambdas[gen.index(lambdas.size())]; };
    std::vector<std::pair<std::string, int>> fails;
    auto tally = [&](const std::string& what, bool ok) {
        for (auto& [name, n] : fails)
            if (name == what) {
                n += !ok;
                return;
            }
        fails.emplace_back(what, !ok);
    };
    for (int i = 0; i < 100; ++i) {
        const auto t = random_triple(gen);
        const auto ab = minkowski_add(t.a, t.b);
        tally("associativity", set_equals(minkowski_add(ab, t.c), minkowski_add(t.a, minkowski_add(t.b, t.c))));
        tally("commutativity", set_equals(ab, minkowski_add(t.b, t.a)));
        tally("identity", set_equals(minkowski_add(t.a, zero_set(t.k)), t.a));
        tally("cancellation invariance",
              rad_equals(RadstromElement{minkowski_add(t.a, t.c), minkowski_add(t.b, t.c)}, RadstromElement{t.a, t.b}));
        tally("phi additivity", rad_equals(rad_embed(ab), rad_add(rad_embed(t.a), rad_embed(t.b))));
        tally("h well-defined", [&] {
            const RadstromElement e{t.a, t.b}, f{minkowski_add(t.a, t.c), minkowski_add(t.b, t.c)};
            return rad_hausdorff(e, NormTag::linf()) == rad_hausdorff(f, NormTag::linf())
                   && rad_hausdorff(e, NormTag::l1()) == rad_hausdorff(f, NormTag::l1());
        }());
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t dim = 1 + gen.index(3);
        const auto k = gen.cone(dim, dim + gen.index(2));
        const auto e1 = random_element(gen, k), e2 = random_element(gen, k);
        const Rational l = pick(), m = pick();
        tally("1.x = x", rad_equals(rad_scalar_mul(Rational(1), e1), e1));
        tally("l(x+y) = lx+ly", rad_equals(rad_scalar_mul(l, rad_add(e1, e2)), rad_add(rad_scalar_mul(l, e1), rad_scalar_mul(l, e2))));
        tally("(l+m)x = lx+mx", rad_equals(rad_scalar_mul(l + m, e1), rad_add(rad_scalar_mul(l, e1), rad_scalar_mul(m, e1))));
        tally("l(mx) = (lm)x", rad_equals(rad_scalar_mul(l, rad_scalar_mul(m, e1)), rad_scalar_mul(l * m, e1)));
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t dim = 1 + gen.index(3);
        const auto k = gen.pointed_cone(dim, gen.index(3));
        const auto e1 = random_element(gen, k), e2 = random_element(gen, k);
        const Rational l = pick();
        bool tri = true, hom = true, zero = true;
        for (const auto& f : k.inequalities()) {
            tri = tri && rad_seminorm(rad_add(e1, e2), f) <= rad_seminorm(e1, f) + rad_seminorm(e2, f);
            hom = hom && rad_seminorm(rad_scalar_mul(l, e1), f) == abs(l) * rad_seminorm(e1, f);
            zero = zero && rad_seminorm(rad_zero(k), f) == 0;
        }
        tally("seminorm triangle", tri);
        tally("seminorm homogeneity", hom);
        tally("seminorm at zero", zero);
    }
    int total_fail = 0;
    std::string detail;
    for (const auto& [name, n] : fails) {
        total_fail += n;
        if (n)
            detail += " " + name + ":" + std::to_string(n);
    }
    return {total_fail == 0,
            std::to_string(fails.size()) + " laws x 100 instances, " + std::to_string(total_fail) + " failures" + detail, {}};
}

// ---- 8 ----
Outcome ordering_cone()
{
    InstanceGenerator gen(1008);
    int agree = 0, inside = 0, gen_disagree = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 1 + gen.index(3);
        const auto k = gen.cone(dim, 1 + gen.index(dim + 1));
        const auto e = random_element(gen, k);
        const bool member = rad_in_ordering_cone(e);
        const DominanceCriterion c = rad_dominance_criterion(e);
        inside += member;
        agree += member == c.all_functionals;
        gen_disagree += member != c.generators_only;
    }
    Outcome o{agree == 200,
              std::to_string(agree) + "/200 agree with m-dominance over K+ (members: " + std::to_string(inside) + ")",
              {}};
    o.info.push_back("m-dominance on the generators of K+ alone disagrees with the ordering cone on "
                     + std::to_string(gen_disagree) + "/200 elements (it is necessary, not sufficient)");
    return o;
}

// ---- 9 ----
Outcome c00_openness()
{
    bool ok = true;
    std::string detail;
    for (unsigned n : {4U, 16U, 64U}) {
        double prev = 2.0, worst = 0;
        bool neg = true, mono = true;
        for (const auto& row : examples::openness_rows(n)) {
            neg = neg && row.pairing < 0;
            worst = std::max(worst, std::abs(row.pairing - row.expected));
            mono = mono && row.gap < prev && std::abs(row.gap - std::sqrt(1.0 / row.n)) <= 1e-12;
            prev = row.gap;
        }
        ok = ok && neg && mono && worst <= 1e-12;
        detail += " N=" + std::to_string(n) + ": " + (neg ? "all <0" : "NOT all <0") + ", err " + fmt("%.1e", worst)
                  + (mono ? ", gap decreasing;" : ", gap NOT decreasing;");
    }
    return {ok, detail.substr(1), {}};
}

// ---- 10 ----
bool dominates(const RVector& b, const RVector& a) // a - b in R^n_+ \ {0}
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i])
            return false;
        strict = strict || a[i] > b[i];
    }
    return strict;
}

bool strictly_dominates(const RVector& b, const RVector& a)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] > b[i]))
            return false;
    return true;
}

Outcome pareto_suite()
{
    InstanceGenerator gen(1010);
    int agree = 0, weak_points = 0, witnessed = 0, hull_minimal = 0, hull_witnessed = 0, bad_witness = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t dim = 1 + gen.index(4);
        const auto a = gen.points(1 + gen.index(12), dim, 4);
        const auto k = orthant(dim);
        std::vector<RVector> p, w;
        for (const auto& x : a) {
            bool dom = false, sdom = false;
            for (const auto& b : a) {
                dom = dom || dominates(b, x);
                sdom = sdom || strictly_dominates(b, x);
            }
            if (!dom)
                p.push_back(x);
            if (!sdom)
                w.push_back(x);
        }
        agree += pareto_points(a, k) == p && weak_pareto_points(a, k) == w;
        for (const auto& x : w) {
            ++weak_points;
            const auto f = scalarization_witness(a, k, x);
            if (f) {
                ++witnessed;
                bool ok = !is_zero(*f) && k.dual_contains(*f);
                for (const auto& b : a)
                    ok = ok && dot(*f, b) >= dot(*f, x);
                bad_witness += !ok;
            }
            // weakly minimal in conv(A) + K as well
            if (!detail::positive(detail::interior_slack(x, a, k))) {
                ++hull_minimal;
                hull_witnessed += f.has_value();
            }
        }
    }
    std::ostringstream s;
    s << "oracle agreement " << agree << "/100; verified witnesses for " << witnessed << "/" << weak_points
      << " weak Pareto points (" << bad_witness << " invalid)";
    Outcome o{agree == 100 && witnessed == weak_points && bad_witness == 0, s.str(), {}};
    o.info.push_back("points weakly minimal in the K-convex set conv(A)+K: " + std::to_string(hull_witnessed) + "/"
                     + std::to_string(hull_minimal) + " have a witness; the remaining "
                     + std::to_string(weak_points - witnessed) + " lack one because A itself is not K-convex");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"distance duality formula", duality_formula},
        {"c0 family at N=64", c0_family},
        {"ice-cream cone", ice_cream},
        {"hyperbola m-values and Lipschitz failure", hyperbola},
        {"cancellation soundness", cancellation_soundness},
        {"inf-dominance and tilde-inclusion equivalences", equivalences},
        {"Radstrom algebra", radstrom_algebra},
        {"ordering cone vs m-dominance", ordering_cone},
        {"c00 openness", c00_openness},
        {"Pareto suite", pareto_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        for (const auto& line : o.info)
            std::printf("     info: %s\n", line.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
