#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "rcpoly/rational.hpp"

namespace rcpoly {

/// Exponent pair of a bivariate Laurent monomial; either entry may be negative.
struct ExponentPair {
    std::int64_t eu = 0;
    std::int64_t ev = 0;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

    ExponentPair operator+(const ExponentPair& o) const { return {eu + o.eu, ev + o.ev}; }
    ExponentPair operator-() const { return {-eu, -ev}; }
};

/// Canonical term order: graded lexicographic on (eu + ev, eu), ascending.
struct GradedLexLess {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const {
        const std::int64_t da = a.eu + a.ev;
        const std::int64_t db = b.eu + b.ev;
        if (da != db) return da < db;
        return a.eu < b.eu;
    }
};

/// Sparse bivariate Laurent polynomial with exact integer coefficients.
/// No stored term has coefficient zero; term keys are unique.
class LaurentPoly2 {
  public:
    using TermMap = std::map<ExponentPair, Int, GradedLexLess>;

    LaurentPoly2() = default;

    static LaurentPoly2 zero() { return LaurentPoly2(); }
    static LaurentPoly2 one() { return monomial({0, 0}, 1); }
    static LaurentPoly2 monomial(ExponentPair e, Int c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given exponent pair (zero when absent).
    Int coeff(const ExponentPair& e) const;

    /// Adds c * u^eu * v^ev into this polynomial, pruning a zero result.
    void add_term(const ExponentPair& e, const Int& c);

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);

    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }

    /// Shifts every exponent by e and scales every coefficient by c.
    LaurentPoly2 mul_monomial(const ExponentPair& e, const Int& c) const;

    /// Swaps the roles of the two variables: (eu, ev) -> (ev, eu).
    LaurentPoly2 transpose() const;

    /// Exact value at (x, y). Throws ZeroBaseError when a negative exponent
    /// meets a zero argument.
    Rational eval(const Rational& x, const Rational& y) const;

    /// Signed-sum text form, e.g. "1 + v + v^2"; exponent-0 factors omitted.
    std::string to_text(std::string_view var1 = "u", std::string_view var2 = "v") const;

    /// JSON array of {"eu": int, "ev": int, "c": decimal-string} in canonical
    /// term order.
    std::string to_json() const;
    static LaurentPoly2 from_json(std::string_view json);

  private:
    TermMap terms_;
};

/// x^e as an exact rational; throws ZeroBaseError for e < 0 at x = 0.
Rational rational_pow(const Rational& x, std::int64_t e);

}  // namespace rcpoly
