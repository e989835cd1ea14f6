#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "conic/cone.hpp"
#include "conic/conic_set.hpp"
#include "conic/rational.hpp"

namespace conic {

/**
 * Seeded source of small random rational data for property sweeps.
 *
 * Draws are taken straight from std::mt19937_64 with modular reduction (no
 * std::uniform_int_distribution), so a seed reproduces the same instances
 * bit for bit on every standard library.
 */
class InstanceGenerator
{
  public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Integer in [lo, hi].
    long integer(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng_() % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    bool coin() { return (rng_() & 1U) != 0; }

    /// p/q with |p| <= range and q in [1, max_den].
    Rational rational(long range, long max_den = 1)
    {
        Rational q(integer(-range, range), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    Rational nonnegative_rational(long range, long max_den = 1)
    {
        Rational q(integer(0, range), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    RVector vector(std::size_t dim, long range, long max_den = 1)
    {
        RVector v(dim);
        for (auto& x : v)
            x = rational(range, max_den);
        return v;
    }

    RVector nonzero_vector(std::size_t dim, long range)
    {
        RVector v;
        do
            v = vector(dim, range);
        while (is_zero(v));
        return v;
    }

    std::vector<RVector> points(std::size_t count, std::size_t dim, long range, long max_den = 1)
    {
        std::vector<RVector> out;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(vector(dim, range, max_den));
        return out;
    }

    /// cone{g_1..g_count} with small integer generators (may be non-pointed or lower-dimensional).
    PolyhedralCone cone(std::size_t dim, std::size_t count, long range = 3)
    {
        std::vector<RVector> gens;
        for (std::size_t i = 0; i < count; ++i)
            gens.push_back(nonzero_vector(dim, range));
        return PolyhedralCone::from_generators(dim, std::move(gens));
    }

    /// A pointed full-dimensional cone: the orthant plus extra generators inside the positive halfspace of (1..1).
    PolyhedralCone pointed_cone(std::size_t dim, std::size_t extra, long range = 3)
    {
        std::vector<RVector> gens;
        for (std::size_t i = 0; i < dim; ++i)
            gens.push_back(unit_vector(dim, i));
        for (std::size_t i = 0; i < extra; ++i) {
            RVector g = vector(dim, range);
            Rational s(0);
            for (const auto& x : g)
                s += x;
            if (sgn(s) <= 0) {
                g[index(dim)] += 1 - s;
            }
            gens.push_back(std::move(g));
        }
        return PolyhedralCone::from_generators(dim, std::move(gens));
    }

    /// Random element of cone{gens}: nonnegative integer combination.
    RVector cone_point(const std::vector<RVector>& gens, std::size_t dim, long range = 3)
    {
        RVector v = zeros(dim);
        for (const auto& g : gens)
            v = v + Rational(integer(0, range)) * g;
        return v;
    }

    /// Random point of conv(pts): convex weights with denominator at most `den`.
    RVector convex_point(const std::vector<RVector>& pts, long den = 6)
    {
        std::vector<long> w(pts.size());
        long total = 0;
        for (auto& x : w) {
            x = integer(0, den);
            total += x;
        }
        if (total == 0) {
            w[index(pts.size())] = 1;
            total = 1;
        }
        RVector v = zeros(pts.front().size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (w[i] != 0)
                v = v + Rational(w[i], total) * pts[i];
        return v;
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

/// Three sets over one cone, used by the cancellation and Radstrom sweeps.
struct SetTriple
{
    PolyhedralCone k;
    ConicSet a, b, c;
};

/**
 * Fully random triple: dimension 1..4, K spanned by dim..dim+2 random integer
 * generators, each set 1..3 integer points in [-3,3]^dim.
 */
inline SetTriple random_triple(InstanceGenerator& gen)
{
    const std::size_t dim = 1 + gen.index(4);
    PolyhedralCone k = gen.cone(dim, dim + gen.index(3));
    auto set = [&] { return ConicSet::finite(k, gen.points(1 + gen.index(3), dim, 3)); };
    ConicSet a = set(), b = set(), c = set();
    return SetTriple{k, a, b, c};
}

/**
 * Triple whose cancellation hypothesis holds by construction: every point of A
 * is a convex combination of points of B plus a nonnegative combination of
 * generators of K, so A ⊆ B~ and hence A + C ⊆ C + B~.
 */
inline SetTriple random_hypothesis_triple(InstanceGenerator& gen)
{
    const std::size_t dim = 1 + gen.index(4);
    PolyhedralCone k = gen.cone(dim, 1 + gen.index(dim + 2));
    std::vector<RVector> b_pts = gen.points(1 + gen.index(3), dim, 3);
    std::vector<RVector> a_pts;
    for (std::size_t i = 0, n = 1 + gen.index(3); i < n; ++i)
        a_pts.push_back(gen.convex_point(b_pts) + gen.cone_point(k.generators(), dim, 2));
    ConicSet a = ConicSet::finite(k, a_pts);
    ConicSet b = ConicSet::finite(k, b_pts);
    ConicSet c = ConicSet::finite(k, gen.points(1 + gen.index(3), dim, 3));
    return SetTriple{k, a, b, c};
}

} // namespace conic
