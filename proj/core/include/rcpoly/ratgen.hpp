#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rcpoly/laurent.hpp"

namespace rcpoly {

/// One factor (1 - x^{g.eu} y^{g.ev}) of a denominator. Stored canonically
/// oriented: g.eu > 0, or g.eu = 0 and g.ev > 0.
struct DenomFactor {
    ExponentPair g;

    explicit DenomFactor(ExponentPair e);

    friend bool operator==(const DenomFactor&, const DenomFactor&) = default;
};

struct FactorLess {
    bool operator()(const DenomFactor& a, const DenomFactor& b) const {
        if (a.g.eu != b.g.eu) return a.g.eu < b.g.eu;
        return a.g.ev < b.g.ev;
    }
};

/// Result of orienting a factor: 1/(1 - x^g) = sign * x^{-shift} / (1 - x^{factor.g}).
/// For a canonical g the shift is (0,0) and the sign +1; otherwise factor.g = -g,
/// shift = g and sign = -1, realizing 1 - x^{-a}y^{-b} = -x^{-a}y^{-b}(1 - x^a y^b).
struct CanonicalizedFactor {
    DenomFactor factor;
    ExponentPair shift;
    int sign;
};

/// Throws ZeroVectorError on g = (0,0).
CanonicalizedFactor canonicalize_factor(ExponentPair g);

/// One summand (numerator) / (product of factors). An empty denominator means
/// a plain Laurent polynomial.
struct GFTerm {
    LaurentPoly2 num;
    std::vector<DenomFactor> den;  // kept sorted; multiset semantics
};

/// Builds a term from raw (possibly non-canonical) factor exponents, folding
/// each orientation flip into the numerator.
GFTerm make_gf_term(LaurentPoly2 num, const std::vector<ExponentPair>& raw_factors);

/// Finite sum of GFTerms. No hidden normalization: equality of the rational
/// functions is decided by gf_equal.
struct RationalGF {
    std::vector<GFTerm> terms;

    static RationalGF from_poly(LaurentPoly2 p) { return RationalGF{{GFTerm{std::move(p), {}}}}; }

    std::string to_json() const;
    static RationalGF from_json(std::string_view json);
    std::string to_text(std::string_view var1 = "x", std::string_view var2 = "y") const;
};

/// Concatenates the term lists; no simplification.
RationalGF gf_add(const RationalGF& a, const RationalGF& b);

/// Negates every numerator.
RationalGF gf_negate(const RationalGF& a);

/// Multiplies every numerator by c * x^e.
RationalGF gf_mul_monomial(const RationalGF& a, const ExponentPair& e, const Int& c);

/// Substitutes x -> x^-1 (axis = 0) or y -> y^-1 (axis = 1): exponent sign
/// flip on numerators and factors, re-canonicalized.
RationalGF gf_invert_axis(const RationalGF& a, int axis);

/// Single term over the multiset lcm of all denominators, numerator the
/// cross-multiplied sum.
GFTerm combine_over_common_denominator(const RationalGF& a);

/// True iff a and b represent the same rational function, decided by
/// combining a - b over a common denominator and testing the numerator
/// for structural zero.
bool gf_equal(const RationalGF& a, const RationalGF& b);

/// Exact quotient after dividing the combined numerator by every denominator
/// factor. Throws NotPolynomialError when any division leaves a remainder.
LaurentPoly2 gf_as_polynomial(const RationalGF& a);

/// Exact value at (x, y). Throws PoleError when a factor vanishes there and
/// ZeroBaseError when a negative exponent meets a zero argument.
Rational gf_eval(const RationalGF& a, const Rational& x, const Rational& y);

/// Exact quotient p / (1 - x^g); throws NotPolynomialError on a remainder.
LaurentPoly2 divide_by_one_minus_monomial(const LaurentPoly2& p, const ExponentPair& g);

}  // namespace rcpoly
