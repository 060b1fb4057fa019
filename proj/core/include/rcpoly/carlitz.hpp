#pragma once

#include <optional>
#include <utility>

#include "rcpoly/laurent.hpp"
#include "rcpoly/report.hpp"

namespace rcpoly {

/// The linear map f(x) = (a*x + t)/b with b >= 1. The slope numerator a may
/// be any integer; b is the summation length of the attached polynomials.
struct LinearMapQ {
    Int a;
    Int b;
    Rational t;

    LinearMapQ(Int a_, Int b_, Rational t_);

    Rational operator()(const Rational& x) const {
        return (Rational(a) * x + t) / Rational(b);
    }
};

/// g with g(f(x)) = x, normalized to a positive stored denominator.
/// Throws ZeroSlopeError when f.a = 0.
LinearMapQ inverse_map(const LinearMapQ& f);

struct RCParams {
    Rational s;
    LinearMapQ f;
};

/// Sum over k = ceil(s) .. ceil(s) + f.b - 1 of u^floor(f(k)) v^k: exactly
/// f.b terms, all with coefficient 1. The first variable carries the floor
/// exponent, the second carries k.
LaurentPoly2 rc(const Rational& s, const LinearMapQ& f);

/// Sum over k = 1 .. b-1 of u^floor(k*a/b) v^(k-1); zero for b = 1.
LaurentPoly2 dedekind_carlitz(const Int& a, const Int& b);

/// The unique integer pair on the half-open segment [(p,q), (p+b, q+a)),
/// present exactly when t := b*q - a*p is an integer. Requires gcd(a,b) = 1.
std::optional<std::pair<Int, Int>> segment_lattice_point(const Rational& p, const Rational& q,
                                                         const Int& a, const Int& b);

/// Checks v(1-u) RC(v,u,p,f) + u(1-v) RC(u,v,q,f^-1)
///        = u^ceil(p) v^ceil(q) (1 - u^b v^a) - u^c v^d (1-u)(1-v),
/// with f(x) = (a*x + t)/b, t := b*q - a*p, and the last term present only
/// when the lattice point (c,d) exists.
VerificationReport verify_thm1(const Int& a, const Int& b, const Rational& p, const Rational& q);

/// Checks (v-1) c(u,v,a,b) + (u-1) c(v,u,b,a) = u^(a-1) v^(b-1) - 1.
VerificationReport verify_carlitz_reciprocity(const Int& a, const Int& b);

}  // namespace rcpoly
