#include "rcpoly/dedekind.hpp"

namespace rcpoly {

namespace {

void require_positive(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw Error("parameters must be positive");
}

void require_coprime(const Int& a, const Int& b) {
    if (gcd(a, b) != 1)
        throw NotCoprimeError("parameters " + a.get_str() + ", " + b.get_str() +
                              " are not coprime");
}

VerificationReport make_report(IdentityId id,
                               std::vector<std::pair<std::string, std::string>> params,
                               const Rational& lhs, const Rational& rhs, std::string notes = "") {
    VerificationReport rep;
    rep.id = id;
    rep.params = std::move(params);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.holds = lhs == rhs;
    if (!rep.holds) rep.diff = (lhs - rhs).str();
    rep.notes = std::move(notes);
    return rep;
}

}  // namespace

Rational dedekind_sum(const Int& a, const Int& b) {
    require_positive(a, b);
    Rational sum;
    for (Int k = 0; k < b; ++k)
        sum += sawtooth(Rational(k * a, b)) * sawtooth(Rational(k, b));
    return sum;
}

Rational dedekind_rademacher(const Rational& t, const Int& a, const Int& b) {
    require_positive(a, b);
    const Rational br{b};
    Rational sum;
    for (Int k = 0; k < b; ++k)
        sum += sawtooth((Rational(k * a) + t) / br) * sawtooth(Rational(k, b));
    return sum;
}

Rational rademacher_xy(const Int& a, const Int& b, const Rational& x, const Rational& y) {
    if (b < 1)
        throw Error("summation bound b must be positive");
    const Rational ar{a};
    const Rational br{b};
    Rational sum;
    for (Int k = 0; k < b; ++k) {
        const Rational ky = Rational(k) + y;
        sum += sawtooth(ky * ar / br + x) * sawtooth(ky / br);
    }
    return sum;
}

NormalizedRademacher normalize_rademacher(const Rational& t, const Int& a, const Int& b) {
    require_positive(a, b);
    if (b == 1) return {bracket_mod(t, b), a, b};
    Int ar = a % b;
    if (sgn(ar) == 0)
        throw ZeroResidueError("a is a multiple of b; the reduced slope would vanish");
    return {bracket_mod(t, b), ar, b};
}

VerificationReport verify_dedekind_reciprocity(const Int& a, const Int& b) {
    require_positive(a, b);
    require_coprime(a, b);
    const Rational lhs = dedekind_sum(a, b) + dedekind_sum(b, a);
    const Rational ar{a};
    const Rational br{b};
    const Rational rhs =
        Rational(-1, 4) + Rational(1, 12) * (ar / br + Rational(1) / (ar * br) + br / ar);
    return make_report(IdentityId::dedekind, {{"a", a.get_str()}, {"b", b.get_str()}}, lhs, rhs);
}

VerificationReport verify_rademacher_reciprocity(const Int& a, const Int& b, const Rational& x,
                                                 const Rational& y) {
    require_positive(a, b);
    require_coprime(a, b);
    if (x.is_integer() && y.is_integer())
        throw BothIntegersError("x and y must not both be integers");
    const Rational lhs = rademacher_xy(a, b, x, y) + rademacher_xy(b, a, y, x);
    const Rational ar{a};
    const Rational br{b};
    const Rational rhs = sawtooth(x) * sawtooth(y) +
                         Rational(1, 2) * (ar / br * bernoulli2_periodized(y) +
                                           Rational(1) / (ar * br) * bernoulli2_periodized(ar * y + br * x) +
                                           br / ar * bernoulli2_periodized(x));
    return make_report(IdentityId::rademacher,
                       {{"a", a.get_str()}, {"b", b.get_str()}, {"x", x.str()}, {"y", y.str()}},
                       lhs, rhs);
}

VerificationReport verify_thm3(const Int& a, const Int& b, const Rational& t) {
    require_positive(a, b);
    require_coprime(a, b);
    if (!(a < b))
        throw OutOfRangeError("requires a < b");
    if (t < Rational(0) || t >= Rational(b))
        throw OutOfRangeError("requires 0 <= t < b");

    const Rational lhs = dedekind_rademacher(-t, a, b) + dedekind_rademacher(t, b, a);

    const Rational ar{a};
    const Rational br{b};
    const bool chi = t.is_integer();
    const Rational ft{floor(t)};
    Rational rhs = Rational(1, 12) * (ar / br + Rational(1) / (ar * br) + br / ar) -
                   Rational(1, 4) + Rational(1, 2) / (ar * br) * ft * (ft + Rational(1)) -
                   Rational(1, 2) * Rational(floor(t / ar));
    if (chi) {
        const Rational a_inv{mod_inverse(a, b)};
        const Rational b_inv{mod_inverse(b, a)};
        rhs -= Rational(1, 2) * (sawtooth(a_inv * t / br) + sawtooth(b_inv * t / ar));
    }
    return make_report(IdentityId::thm3,
                       {{"a", a.get_str()}, {"b", b.get_str()}, {"t", t.str()}}, lhs, rhs,
                       chi ? "chi=1" : "chi=0");
}

VerificationReport verify_lemma4a(const Int& a, const Int& b, const Rational& t) {
    require_positive(a, b);
    require_coprime(a, b);
    const Rational br{b};
    Rational lhs;
    for (Int k = 0; k < b; ++k)
        lhs += frac((Rational(a * k) + t) / br);
    const Rational rhs = Rational(b - 1) / Rational(2) + frac(t);
    return make_report(IdentityId::lemma4a,
                       {{"a", a.get_str()}, {"b", b.get_str()}, {"t", t.str()}}, lhs, rhs);
}

VerificationReport verify_lemma4b(const Int& a, const Int& b, const Rational& t) {
    require_positive(a, b);
    require_coprime(a, b);
    const Rational br{b};
    Rational lhs;
    for (Int k = 0; k < b; ++k)
        lhs += Rational(k) * frac((Rational(a * k) + t) / br);
    const bool chi = t.is_integer();
    Rational rhs = br * dedekind_rademacher(t, a, b) + Rational(1, 4) * br * Rational(b - 1) +
                   Rational(1, 2) * br * frac(t) - Rational(1, 2) * bracket_mod(t, b);
    if (chi)
        rhs += Rational(1, 2) * br * sawtooth(t * Rational(mod_inverse(a, b)) / br);
    return make_report(IdentityId::lemma4b,
                       {{"a", a.get_str()}, {"b", b.get_str()}, {"t", t.str()}}, lhs, rhs,
                       chi ? "chi=1" : "chi=0");
}

}  // namespace rcpoly
