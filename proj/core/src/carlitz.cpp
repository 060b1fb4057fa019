#include "rcpoly/carlitz.hpp"

namespace rcpoly {

namespace {

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p())
        throw Error("exponent out of the supported 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

void require_coprime(const Int& a, const Int& b) {
    if (gcd(a, b) != 1)
        throw NotCoprimeError("parameters " + a.get_str() + ", " + b.get_str() +
                              " are not coprime");
}

LaurentPoly2 u_pow_v_pow(const Int& eu, const Int& ev) {
    return LaurentPoly2::monomial({to_i64(eu), to_i64(ev)}, 1);
}

}  // namespace

LinearMapQ::LinearMapQ(Int a_, Int b_, Rational t_)
    : a(std::move(a_)), b(std::move(b_)), t(std::move(t_)) {
    if (b < 1)
        throw Error("linear map denominator must be positive");
}

LinearMapQ inverse_map(const LinearMapQ& f) {
    if (sgn(f.a) == 0)
        throw ZeroSlopeError("cannot invert a constant map");
    if (f.a > 0) return LinearMapQ(f.b, f.a, -f.t);
    return LinearMapQ(-f.b, -f.a, f.t);
}

LaurentPoly2 rc(const Rational& s, const LinearMapQ& f) {
    LaurentPoly2 p;
    const Int k0 = ceil(s);
    for (Int k = k0; k < k0 + f.b; ++k) {
        const Int fl = floor(f(Rational(k)));
        p.add_term({to_i64(fl), to_i64(k)}, 1);
    }
    return p;
}

LaurentPoly2 dedekind_carlitz(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw Error("dedekind_carlitz parameters must be positive");
    LaurentPoly2 p;
    for (Int k = 1; k < b; ++k) {
        const Int fl = floor(Rational(k * a, b));
        p.add_term({to_i64(fl), to_i64(k - 1)}, 1);
    }
    return p;
}

std::optional<std::pair<Int, Int>> segment_lattice_point(const Rational& p, const Rational& q,
                                                         const Int& a, const Int& b) {
    require_coprime(a, b);
    const Rational t = Rational(b) * q - Rational(a) * p;
    if (!t.is_integer()) return std::nullopt;
    const Int ti = t.num();
    // c == a^-1 (a p - b q)  (mod b), shifted into [p, p + b).
    const Int r = mod_inverse(a, b) * bracket_mod(Rational(-ti), b).num() % b;
    const Int c = r + b * ceil((p - Rational(r)) / Rational(b));
    const Rational d = (Rational(a * c) + Rational(ti)) / Rational(b);
    if (!d.is_integer())
        throw Error("internal: lattice point ordinate is not integral");
    return std::make_pair(c, d.num());
}

VerificationReport verify_thm1(const Int& a, const Int& b, const Rational& p, const Rational& q) {
    require_coprime(a, b);
    if (a < 1 || b < 1)
        throw Error("verify_thm1 parameters must be positive");
    const Rational t = Rational(b) * q - Rational(a) * p;
    const LinearMapQ f(a, b, t);

    const LaurentPoly2 one = LaurentPoly2::one();
    const LaurentPoly2 u = LaurentPoly2::monomial({1, 0}, 1);
    const LaurentPoly2 v = LaurentPoly2::monomial({0, 1}, 1);

    // RC(v,u,p,f) exchanges the variable roles, hence the transpose.
    const LaurentPoly2 lhs =
        v * (one - u) * rc(p, f).transpose() + u * (one - v) * rc(q, inverse_map(f));

    LaurentPoly2 rhs = u_pow_v_pow(ceil(p), ceil(q)) * (one - u_pow_v_pow(b, a));
    const auto cd = segment_lattice_point(p, q, a, b);
    if (cd)
        rhs -= u_pow_v_pow(cd->first, cd->second) * (one - u) * (one - v);

    VerificationReport rep;
    rep.id = IdentityId::thm1;
    rep.params = {{"a", a.get_str()},
                  {"b", b.get_str()},
                  {"p", p.str()},
                  {"q", q.str()}};
    rep.lhs = lhs.to_text();
    rep.rhs = rhs.to_text();
    rep.holds = lhs == rhs;
    if (!rep.holds) rep.diff = (lhs - rhs).to_text();
    rep.notes = "t=" + t.str() + " chi=" + (cd ? "1" : "0");
    if (cd)
        rep.notes += " c=" + cd->first.get_str() + " d=" + cd->second.get_str();
    return rep;
}

VerificationReport verify_carlitz_reciprocity(const Int& a, const Int& b) {
    require_coprime(a, b);
    if (a < 1 || b < 1)
        throw Error("verify_carlitz_reciprocity parameters must be positive");

    const LaurentPoly2 one = LaurentPoly2::one();
    const LaurentPoly2 u = LaurentPoly2::monomial({1, 0}, 1);
    const LaurentPoly2 v = LaurentPoly2::monomial({0, 1}, 1);

    const LaurentPoly2 lhs = (v - one) * dedekind_carlitz(a, b) +
                             (u - one) * dedekind_carlitz(b, a).transpose();
    const LaurentPoly2 rhs = u_pow_v_pow(a - 1, b - 1) - one;

    VerificationReport rep;
    rep.id = IdentityId::carlitz;
    rep.params = {{"a", a.get_str()}, {"b", b.get_str()}};
    rep.lhs = lhs.to_text();
    rep.rhs = rhs.to_text();
    rep.holds = lhs == rhs;
    if (!rep.holds) rep.diff = (lhs - rhs).to_text();
    return rep;
}

}  // namespace rcpoly
