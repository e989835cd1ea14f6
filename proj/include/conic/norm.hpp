#pragma once

#include <string>

#include "conic/error.hpp"
#include "conic/rational.hpp"

namespace conic {

enum class NormKind { Linf, L1, L2approx };

/// Which norm measures distances. Only L2approx is inexact; it carries its tolerance.
struct NormTag
{
    NormKind kind = NormKind::Linf;
    Rational tolerance{0};

    static NormTag linf() { return {NormKind::Linf, Rational(0)}; }
    static NormTag l1() { return {NormKind::L1, Rational(0)}; }
    static NormTag l2(Rational tol) { return {NormKind::L2approx, std::move(tol)}; }

    bool exact() const { return kind != NormKind::L2approx; }
};

inline const char* to_string(NormKind k)
{
    switch (k) {
    case NormKind::Linf: return "linf";
    case NormKind::L1: return "l1";
    case NormKind::L2approx: return "l2";
    }
    return "?";
}

inline NormTag parse_norm(const std::string& s)
{
    if (s == "linf")
        return NormTag::linf();
    if (s == "l1")
        return NormTag::l1();
    if (s == "l2")
        return NormTag::l2(Rational(1, 1000000000000));
    throw MalformedInput("unknown norm \"" + s + "\" (expected linf, l1 or l2)");
}

inline Rational norm_value(const RVector& v, const NormTag& n)
{
    switch (n.kind) {
    case NormKind::Linf: return norm_inf(v);
    case NormKind::L1: return norm_1(v);
    case NormKind::L2approx: break;
    }
    throw Unsupported("exact L2 norm is not available; use soc_project for the ice-cream cone");
}

} // namespace conic
