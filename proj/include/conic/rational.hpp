#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "conic/error.hpp"

namespace conic {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Dense exact coordinate tuple. Points of X and functionals of X* share this type.
using RVector = std::vector<Rational>;

namespace detail {

inline bool is_decimal_integer(std::string_view s, bool allow_sign)
{
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace detail

/**
 * Parse "p" or "p/q" (decimal integers, q > 0). Anything else, including a zero
 * denominator, raises MalformedInput.
 */
inline Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!detail::is_decimal_integer(num, true) || !detail::is_decimal_integer(den, false))
        throw MalformedInput("invalid rational literal \"" + std::string(text) + "\"");
    std::string num_s(num);
    if (num_s[0] == '+')
        num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw MalformedInput("zero denominator in rational literal \"" + std::string(text) + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Always "p/q", including q = 1, so machine output never mixes forms.
inline std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Short form for humans: "p" when the denominator is 1.
inline std::string to_display_string(const Rational& q)
{
    return q.get_str();
}

inline Rational from_int(long v) { return Rational(v); }

inline RVector make_vector(std::initializer_list<long> values)
{
    RVector v;
    v.reserve(values.size());
    for (long x : values)
        v.emplace_back(x);
    return v;
}

inline RVector zeros(std::size_t dim) { return RVector(dim, Rational(0)); }

inline RVector unit_vector(std::size_t dim, std::size_t i)
{
    RVector v = zeros(dim);
    v[i] = 1;
    return v;
}

inline void require_same_dim(const RVector& a, const RVector& b, const char* what)
{
    if (a.size() != b.size())
        throw MalformedInput(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()) + ")");
}

inline Rational dot(const RVector& a, const RVector& b)
{
    require_same_dim(a, b, "dot");
    Rational s(0);
    Rational t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0 || sgn(b[i]) == 0)
            continue;
        mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[i].get_mpq_t());
        s += t;
    }
    return s;
}

inline RVector operator+(const RVector& a, const RVector& b)
{
    require_same_dim(a, b, "vector add");
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline RVector operator-(const RVector& a, const RVector& b)
{
    require_same_dim(a, b, "vector sub");
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline RVector operator-(const RVector& a)
{
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

inline RVector operator*(const Rational& s, const RVector& a)
{
    RVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

inline bool is_zero(const RVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Rational norm_inf(const RVector& v)
{
    Rational m(0);
    for (const auto& x : v)
        m = std::max(m, Rational(abs(x)));
    return m;
}

inline Rational norm_1(const RVector& v)
{
    Rational s(0);
    for (const auto& x : v)
        s += abs(x);
    return s;
}

inline std::vector<double> to_double(const RVector& v)
{
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].get_d();
    return r;
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rational exact_from_double(double x)
{
    Rational q(x);
    q.canonicalize();
    return q;
}

/**
 * Scale a nonzero vector to the primitive integer vector on the same ray
 * (integer coordinates with gcd 1). The zero vector is returned unchanged.
 */
inline RVector primitive(const RVector& v)
{
    if (is_zero(v))
        return v;
    mpz_class l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    RVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = Rational(ints[i] / g);
    return r;
}

inline bool lex_less(const RVector& a, const RVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Primitive-scale, sort and deduplicate a list of directions.
inline std::vector<RVector> canonical_directions(std::vector<RVector> dirs)
{
    std::vector<RVector> out;
    out.reserve(dirs.size());
    for (auto& d : dirs)
        if (!is_zero(d))
            out.push_back(primitive(d));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Sort and deduplicate points (no rescaling).
inline std::vector<RVector> canonical_points(std::vector<RVector> pts)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

inline std::string to_string(const RVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_display_string(v[i]);
    }
    return s + ")";
}

} // namespace conic
