#include <gtest/gtest.h>

#include "conic/boundedness.hpp"
#include "conic/conic_set.hpp"
#include "conic/random_instances.hpp"
#include "support/oracles.hpp"

using namespace conic;

namespace {

RVector v(std::initializer_list<long> xs) { return make_vector(xs); }

PolyhedralCone orthant(std::size_t d = 2) { return PolyhedralCone::nonnegative_orthant(d); }

ConicSet pts(std::vector<RVector> p, PolyhedralCone k = orthant()) { return ConicSet::finite(std::move(k), std::move(p)); }

ConicSet hyperbola_samples()
{
    std::vector<RVector> p;
    for (int j = -10; j <= 10; ++j) {
        Rational t = j >= 0 ? Rational(mpz_class(1) << j) : Rational(1, mpz_class(1) << -j);
        p.push_back({t, Rational(1 / t)});
    }
    return pts(p);
}

} // namespace

TEST(MValue, Examples)
{
    auto a = m_value(pts({v({0, 0})}), v({1, 1}));
    ASSERT_FALSE(a.is_minus_infinity());
    EXPECT_EQ(*a.value, 0);
    EXPECT_TRUE(a.attained);
    EXPECT_EQ(*a.argmin, v({0, 0}));

    auto h = m_value(hyperbola_samples(), v({1, 1}));
    EXPECT_EQ(*h.value, 2);
    EXPECT_EQ(*h.argmin, v({1, 1}));

    EXPECT_TRUE(m_value(pts({v({1, 0})}), v({-1, 0})).is_minus_infinity());
    EXPECT_THROW(m_value(pts({v({1, 0})}), v({1, 0, 0})), MalformedInput);
}

TEST(MValue, HPolyhedronUsesRecessionDirections)
{
    // {x2 >= 0} over the orthant recedes along -e1, so f = (1,0) is unbounded below
    auto s = ConicSet::hpoly(orthant(), {v({0, 1})}, v({0}));
    EXPECT_TRUE(m_value(s, v({1, 0})).is_minus_infinity());
    EXPECT_EQ(*m_value(s, v({0, 1})).value, 0);
}

TEST(Excess, Examples)
{
    EXPECT_EQ(excess_on_functional(pts({v({1, 1})}), v({1, 0})), ExtendedReal::finite(0));
    EXPECT_EQ(excess_on_functional(pts({v({-3, 0})}), v({1, 0})), ExtendedReal::finite(3));
    EXPECT_EQ(excess_on_functional(pts({v({5, 5})}), v({1, -2})), ExtendedReal::finite(0));
    // f in K-: f(K) = (-inf, 0], f(A) = {-2} is inside
    EXPECT_EQ(excess_on_functional(pts({v({2, 0})}), v({-1, 0})), ExtendedReal::finite(0));
    EXPECT_EQ(excess_on_functional(pts({v({-2, 0})}), v({-1, 0})), ExtendedReal::finite(2));
    // f vanishing on K: f(K) = {0}
    auto ray = PolyhedralCone::from_generators(2, {v({1, 0})});
    EXPECT_EQ(excess_on_functional(pts({v({4, -3})}, ray), v({0, 1})), ExtendedReal::finite(3));
}

TEST(Excess, FiniteForAllFunctionalsOnPolyhedralBoundedSets)
{
    InstanceGenerator gen(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + gen.index(2);
        auto k = gen.cone(dim, 1 + gen.index(4));
        auto s = ConicSet::finite(k, gen.points(1 + gen.index(4), dim, 5));
        for (int i = 0; i < 10; ++i) {
            auto f = gen.vector(dim, 3);
            auto e = excess_on_functional(s, f);
            ASSERT_FALSE(e.is_infinite());
            // oracle: sup over points of the distance from f(a) to f(K) computed from the signs
            const bool plus = k.dual_contains(f), minus = k.dual_contains(-f);
            Rational expected(0);
            for (const auto& p : s.vrep().points) {
                const Rational fa = dot(f, p);
                Rational d(0);
                if (plus && minus)
                    d = abs(fa);
                else if (plus)
                    d = fa < 0 ? Rational(-fa) : Rational(0);
                else if (minus)
                    d = fa > 0 ? fa : Rational(0);
                expected = std::max(expected, d);
            }
            ASSERT_EQ(*e.value, expected);
        }
    }
}

TEST(RecessionCone, Examples)
{
    EXPECT_EQ(recession_cone_of(pts({v({7, -7})})), orthant());
    auto h = ConicSet::hpoly(orthant(), {v({1, 0}), v({0, 1})}, v({1, -2}));
    EXPECT_EQ(recession_cone_of(h), PolyhedralCone::from_inequalities(2, {v({1, 0}), v({0, 1})}));
    auto half = ConicSet::hpoly(PolyhedralCone::zero_cone(2), {v({1, 1})}, v({0}));
    EXPECT_EQ(recession_cone_of(half), PolyhedralCone::from_inequalities(2, {v({1, 1})}));
    auto fam = ConicSet::family(orthant(), {v({1, 1})});
    EXPECT_THROW(recession_cone_of(fam), Unsupported);
}

TEST(BarrierCone, Examples)
{
    EXPECT_EQ(barrier_cone_of(pts({v({0, 0})})), orthant().negated());
    auto half = ConicSet::hpoly(PolyhedralCone::zero_cone(2), {v({1, 0})}, v({0}));
    // oracle: generators of the polar of the halfplane, negated
    auto polar = oracle::brute_force_extreme_rays({v({1, 0}), v({0, 1}), v({0, -1})}, 2);
    std::vector<RVector> neg;
    for (const auto& g : polar)
        neg.push_back(-g);
    EXPECT_EQ(barrier_cone_of(half), PolyhedralCone::from_generators(2, neg));
    EXPECT_EQ(barrier_cone_of(half), PolyhedralCone::from_generators(2, {v({-1, 0})}));
    auto whole = ConicSet::hpoly(PolyhedralCone::zero_cone(2), {}, {});
    EXPECT_EQ(barrier_cone_of(whole), PolyhedralCone::zero_cone(2));
    EXPECT_THROW(barrier_cone_of(ConicSet::family(orthant(), {v({1, 1})})), Unsupported);
}

TEST(SetIncludes, Examples)
{
    EXPECT_TRUE(set_includes(pts({v({2, 2})}), pts({v({1, 1})})));
    EXPECT_FALSE(set_includes(pts({v({0, 0})}), pts({v({1, 1})})));
    EXPECT_TRUE(set_includes(pts({v({1, 0}), v({0, 1})}), pts({v({0, 0})})));
    EXPECT_EQ(*find_uncovered(pts({v({0, 0})}), pts({v({1, 1})})), v({0, 0}));
    EXPECT_THROW(set_includes(pts({v({0, 0})}), pts({v({0, 0, 0})}, orthant(3))), MalformedInput);
}

TEST(SetIncludes, RaysOutsideTheTargetRecessionCone)
{
    auto half = ConicSet::hpoly(orthant(), {v({0, 1})}, v({0}));
    auto corner = pts({v({0, 0})});
    EXPECT_TRUE(set_includes(corner, half));
    auto witness = find_uncovered(half, corner);
    ASSERT_TRUE(witness.has_value());
    EXPECT_TRUE(contains_point(half, *witness));
    EXPECT_FALSE(contains_point(corner, *witness));
}

TEST(MinkowskiAdd, Examples)
{
    auto s = minkowski_add(pts({v({1, 0})}), pts({v({0, 1})}));
    EXPECT_TRUE(set_equals(s, pts({v({1, 1})})));
    EXPECT_EQ(s.vrep().points, std::vector<RVector>{v({1, 1})});

    auto base = pts({v({3, -1}), v({-2, 4})});
    EXPECT_TRUE(set_equals(minkowski_add(base, pts({v({0, 0})})), base));

    auto two = pts({v({1, 0}), v({0, 1})});
    auto sum = minkowski_add(two, two);
    // oracle: all pairwise sums
    std::vector<RVector> pairwise;
    for (const auto& a : {v({1, 0}), v({0, 1})})
        for (const auto& b : {v({1, 0}), v({0, 1})})
            pairwise.push_back(a + b);
    EXPECT_TRUE(set_equals(sum, pts(pairwise)));
    EXPECT_TRUE(set_equals(sum, pts({v({2, 0}), v({1, 1}), v({0, 2})})));
    // (1,1) is the midpoint of (2,0) and (0,2), so pruning drops it
    EXPECT_EQ(sum.vrep().points, (std::vector<RVector>{v({0, 2}), v({2, 0})}));
}

TEST(MinkowskiAdd, MixedAmbientConesRejected)
{
    auto a = pts({v({0, 0})});
    auto b = pts({v({0, 0})}, PolyhedralCone::from_generators(2, {v({1, 0})}));
    EXPECT_THROW(minkowski_add(a, b), MalformedInput);
}

TEST(MinkowskiAdd, WithHPolyhedron)
{
    auto half = ConicSet::hpoly(orthant(), {v({0, 1})}, v({1}));
    auto s = minkowski_add(half, pts({v({0, 2})}));
    EXPECT_TRUE(s.is_hpoly());
    EXPECT_TRUE(set_equals(s, ConicSet::hpoly(orthant(), {v({0, 1})}, v({3}))));
}

TEST(HPolyhedron, EmptyRejected)
{
    EXPECT_THROW(ConicSet::hpoly(orthant(), {v({1, 0}), v({-1, 0})}, v({1, 0})), MalformedInput);
    EXPECT_THROW(ConicSet::hpoly(orthant(), {v({1, 0})}, v({1, 0})), MalformedInput);
}

TEST(Classify, FiniteInsideCone)
{
    auto r = classify_boundedness(pts({v({1, 0}), v({0, 1})}));
    EXPECT_TRUE(r.k_bounded);
    EXPECT_EQ(*r.ell, 0);
    EXPECT_TRUE(r.dually_k_bounded);
    EXPECT_TRUE(r.hyperbolic);
    EXPECT_TRUE(r.pseudo_hyperbolic);
    EXPECT_TRUE(r.rec_equals_K);
    EXPECT_FALSE(r.heuristic);
}

TEST(Classify, HalfplaneNotBounded)
{
    auto r = classify_boundedness(ConicSet::hpoly(orthant(), {v({0, 1})}, v({0})));
    EXPECT_FALSE(r.k_bounded);
    EXPECT_FALSE(r.dually_k_bounded);
    EXPECT_FALSE(r.rec_equals_K);
    EXPECT_TRUE(r.hyperbolic);
    ASSERT_TRUE(r.diverging_functional.has_value());
    EXPECT_EQ(*r.diverging_functional, v({1, 0}));
    EXPECT_LT(r.diverging_values.back(), r.diverging_values.front());
    EXPECT_LT(r.divergence.front().distance, r.divergence.back().distance);
}

TEST(Classify, InvalidProbeRejected)
{
    EXPECT_THROW(classify_boundedness(pts({v({0, 0})}), {v({-1, 0})}), InvalidProbe);
}

TEST(Classify, C0FamilyHeuristic)
{
    const std::size_t n = 64;
    std::vector<RVector> table;
    for (std::size_t k = 1; k + 2 <= n; ++k) {
        RVector a = zeros(n);
        for (std::size_t i = 0; i < k; ++i)
            a[i] = Rational(static_cast<long>(k * k));
        a[k] = -Rational(static_cast<long>(k));
        table.push_back(std::move(a));
    }
    RVector probe(n);
    for (std::size_t i = 0; i < n; ++i)
        probe[i] = Rational(1, mpz_class(1) << (i + 1));
    auto r = classify_boundedness(ConicSet::family(orthant(n), table, "c0"), {probe}, 64);
    EXPECT_TRUE(r.heuristic);
    EXPECT_FALSE(r.k_bounded);
    EXPECT_TRUE(r.dually_k_bounded);
    EXPECT_FALSE(r.hyperbolic);
    EXPECT_TRUE(r.pseudo_hyperbolic);
    const auto& last = r.probe_bounds.back();
    EXPECT_EQ(last.functional, probe);
    EXPECT_EQ(*last.m.value, Rational(1, 4));
}

TEST(Classify, FamilyUnboundedBelow)
{
    std::vector<RVector> table;
    for (long k = 1; k <= 64; ++k)
        table.push_back(v({-k, 0}));
    auto r = classify_boundedness(ConicSet::family(orthant(), table), {v({1, 0})});
    EXPECT_FALSE(r.dually_k_bounded);
    EXPECT_FALSE(r.k_bounded);
    ASSERT_TRUE(r.diverging_functional.has_value());
    EXPECT_EQ(*r.diverging_functional, v({1, 0}));
    EXPECT_EQ(r.diverging_values.front(), -1);
    EXPECT_EQ(r.diverging_values.back(), -64);
}

TEST(Classify, ReportInvariantsOnRandomSets)
{
    InstanceGenerator gen(52);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + gen.index(2);
        auto k = gen.cone(dim, 1 + gen.index(4));
        ConicSet s = gen.coin() ? ConicSet::finite(k, gen.points(1 + gen.index(4), dim, 5))
                                : ConicSet::hpoly(k, {gen.nonzero_vector(dim, 2)}, {gen.rational(3)});
        auto r = classify_boundedness(s);
        if (r.k_bounded) {
            ASSERT_TRUE(r.dually_k_bounded);
        }
        if (r.dually_k_bounded) {
            ASSERT_TRUE(r.rec_equals_K && r.pseudo_hyperbolic);
        }
        ASSERT_EQ(r.k_bounded, r.rec_equals_K && r.hyperbolic);
        if (s.is_finite()) {
            ASSERT_TRUE(r.k_bounded);
        }
    }
}

// ell = max_a d(a,K) = max(0, -min over vertices f of K+ ∩ D* of m(f)).
TEST(Classify, EllMatchesDualBallVertices)
{
    InstanceGenerator gen(53);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + gen.index(3);
        auto k = gen.cone(dim, 1 + gen.index(5));
        auto s = ConicSet::finite(k, gen.points(1 + gen.index(5), dim, 6, 2));
        auto r = classify_boundedness(s);
        ASSERT_TRUE(r.k_bounded);
        Rational best(0);
        for (const auto& f : dual_ball_section_vertices(k, NormTag::linf())) {
            auto m = m_value(s, f);
            ASSERT_FALSE(m.is_minus_infinity());
            best = std::max(best, Rational(-*m.value));
        }
        ASSERT_EQ(*r.ell, best) << "trial " << trial;
    }
}

TEST(MValue, ConcaveAndPositivelyHomogeneous)
{
    InstanceGenerator gen(54);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t dim = 2 + gen.index(3);
        auto k = gen.cone(dim, 1 + gen.index(4));
        auto s = ConicSet::finite(k, gen.points(1 + gen.index(5), dim, 6));
        const auto& kp = k.inequalities();
        if (kp.empty())
            continue;
        for (int i = 0; i < 5; ++i) {
            RVector f = gen.cone_point(kp, dim), g = gen.cone_point(kp, dim);
            const Rational lambda = gen.nonnegative_rational(5, 3);
            auto mf = *m_value(s, f).value, mg = *m_value(s, g).value;
            ASSERT_EQ(*m_value(s, lambda * f).value, lambda * mf);
            ASSERT_GE(*m_value(s, f + g).value, mf + mg);
        }
    }
}

TEST(MValue, LipschitzOnFiniteSets)
{
    InstanceGenerator gen(55);
    auto k = orthant(3);
    auto s = ConicSet::finite(k, gen.points(6, 3, 7, 2));
    Rational bound(0);
    for (const auto& p : s.vrep().points)
        bound = std::max(bound, norm_inf(p));
    for (int i = 0; i < 100; ++i) {
        RVector f = gen.cone_point(k.inequalities(), 3, 5), g = gen.cone_point(k.inequalities(), 3, 5);
        ASSERT_LE(abs(*m_value(s, f).value - *m_value(s, g).value), bound * norm_1(f - g));
    }
}

TEST(MValue, TildeInvariance)
{
    InstanceGenerator gen(56);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + gen.index(2);
        auto k = gen.cone(dim, 1 + gen.index(4));
        auto s = ConicSet::finite(k, gen.points(1 + gen.index(4), dim, 5));
        auto t = minkowski_add(s, ConicSet::finite(k, {zeros(dim)}));
        for (const auto& f : k.inequalities())
            ASSERT_EQ(*m_value(s, f).value, *m_value(t, f).value);
    }
}
