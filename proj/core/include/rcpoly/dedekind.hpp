#pragma once

#include "rcpoly/rational.hpp"
#include "rcpoly/report.hpp"

namespace rcpoly {

/// Classical Dedekind sum s(a,b) = sum_{k=0}^{b-1} ((ka/b)) ((k/b)).
Rational dedekind_sum(const Int& a, const Int& b);

/// Dedekind-Rademacher sum r_t(a,b) = sum_{k=0}^{b-1} (((ka+t)/b)) ((k/b)).
Rational dedekind_rademacher(const Rational& t, const Int& a, const Int& b);

/// Rademacher's two-parameter sum
/// d(a,b;x,y) = sum_{k=0}^{b-1} (((k+y)a/b + x)) (((k+y)/b)); a may be any integer.
Rational rademacher_xy(const Int& a, const Int& b, const Rational& x, const Rational& y);

struct NormalizedRademacher {
    Rational t;
    Int a;
    Int b;
};

/// Value-preserving reduction (t, a, b) -> (t mod b, a mod b, b); a is kept
/// unchanged when b = 1. Throws ZeroResidueError when b > 1 and b | a.
NormalizedRademacher normalize_rademacher(const Rational& t, const Int& a, const Int& b);

/// s(a,b) + s(b,a) = -1/4 + (1/12)(a/b + 1/(ab) + b/a).
VerificationReport verify_dedekind_reciprocity(const Int& a, const Int& b);

/// d(a,b;x,y) + d(b,a;y,x) =
///   ((x))((y)) + (1/2)((a/b) B2(y) + (1/(ab)) B2(ay+bx) + (b/a) B2(x)).
/// Requires gcd(a,b) = 1 and x, y not both integers.
VerificationReport verify_rademacher_reciprocity(const Int& a, const Int& b, const Rational& x,
                                                 const Rational& y);

/// r_{-t}(a,b) + r_t(b,a) =
///   (1/12)(a/b + 1/(ab) + b/a) - 1/4 + (1/(2ab)) floor(t)(floor(t)+1)
///   - (1/2) floor(t/a) - (chi/2)( ((a^-1 t / b)) + ((b^-1 t / a)) ).
/// Requires gcd(a,b) = 1, a < b and 0 <= t < b.
VerificationReport verify_thm3(const Int& a, const Int& b, const Rational& t);

/// sum_{k=0}^{b-1} {(ak+t)/b} = (b-1)/2 + {t}.
VerificationReport verify_lemma4a(const Int& a, const Int& b, const Rational& t);

/// sum_{k=0}^{b-1} k {(ak+t)/b} =
///   b r_t(a,b) + (1/4) b(b-1) + (1/2) b {t} - (1/2) [t]_b
///   + (1/2) chi b ((t a^-1 / b)).
VerificationReport verify_lemma4b(const Int& a, const Int& b, const Rational& t);

}  // namespace rcpoly
