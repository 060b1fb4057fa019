#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rcpoly/errors.hpp"

namespace rcpoly {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number. Always stored reduced, denominator >= 1,
/// zero is canonically 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors Int
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses the text form: optional '-', digits, optional '/' and a
    /// positive denominator. "3", "-7/2", "0" are all valid.
    static Rational parse(std::string_view text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;  // kept canonical at all times
};

/// Greatest integer <= x.
Int floor(const Rational& x);

/// Least integer >= x.  ceil(x) = -floor(-x).
Int ceil(const Rational& x);

/// Fractional part x - floor(x), in [0, 1).
Rational frac(const Rational& x);

/// Sawtooth ((x)): x - floor(x) - 1/2 for non-integer x, 0 for integer x.
Rational sawtooth(const Rational& x);

/// Smallest nonnegative rational congruent to x mod m: x - m*floor(x/m).
/// Requires m >= 1.
Rational bracket_mod(const Rational& x, const Int& m);

/// The residue r in {0, ..., m-1} with a*r == 1 (mod m); 0 when m = 1.
/// Throws NotCoprimeError when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

/// Periodized second Bernoulli polynomial: {x}^2 - {x} + 1/6.
Rational bernoulli2_periodized(const Rational& x);

}  // namespace rcpoly
