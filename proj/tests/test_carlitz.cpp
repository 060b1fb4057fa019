#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "rcpoly/carlitz.hpp"
#include "rcpoly/sweep.hpp"

using namespace rcpoly;

namespace {

LaurentPoly2 mono(std::int64_t eu, std::int64_t ev, long c = 1) {
    return LaurentPoly2::monomial({eu, ev}, c);
}

// Independent spelling of the defining sum, kept apart from rc() on purpose.
LaurentPoly2 rc_oracle(const Rational& s, long a, long b, const Rational& t) {
    LaurentPoly2 p;
    const Int k0 = ceil(s);
    for (Int k = k0; k < k0 + b; ++k) {
        const Rational value = (Rational(k) * Rational(a) + t) / Rational(b);
        const Int fl = floor(value);
        p.add_term({fl.get_si(), k.get_si()}, 1);
    }
    return p;
}

}  // namespace

TEST_CASE("rc examples") {
    CHECK(rc(Rational(0), LinearMapQ(1, 1, Rational(0))) == LaurentPoly2::one());
    CHECK(rc(Rational(0), LinearMapQ(1, 3, Rational(0))) ==
          LaurentPoly2::one() + mono(0, 1) + mono(0, 2));
    // k = 1, 2, 3 of (2k + 1/2)/3.
    CHECK(rc(Rational(1, 2), LinearMapQ(2, 3, Rational(1, 2))) ==
          mono(0, 1) + mono(1, 2) + mono(2, 3));
}

TEST_CASE("rc agrees with the defining-sum oracle") {
    SplitMix64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const long a = static_cast<long>(rng.below(19)) - 9;
        const long b = 1 + static_cast<long>(rng.below(9));
        const Rational s(static_cast<long>(rng.below(25)) - 12, 1 + static_cast<long>(rng.below(4)));
        const Rational t(static_cast<long>(rng.below(25)) - 12, 1 + static_cast<long>(rng.below(4)));
        const LaurentPoly2 p = rc(s, LinearMapQ(a, b, t));
        CHECK(p == rc_oracle(s, a, b, t));
        CHECK(p.term_count() == static_cast<std::size_t>(b));
        // Coefficient 1 everywhere and the v-exponents run over the
        // contiguous window ceil(s) .. ceil(s) + b - 1.
        std::vector<std::int64_t> v_exponents;
        for (const auto& [e, c] : p.terms()) {
            CHECK(c == 1);
            v_exponents.push_back(e.ev);
        }
        std::sort(v_exponents.begin(), v_exponents.end());
        const std::int64_t k0 = ceil(s).get_si();
        for (long k = 0; k < b; ++k) CHECK(v_exponents[k] == k0 + k);
    }
}

TEST_CASE("rc shift periodicity: rc(s + b, f) = rc(s, f) * u^a v^b") {
    SplitMix64 rng(22);
    for (int i = 0; i < 50; ++i) {
        const long a = 1 + static_cast<long>(rng.below(9));
        const long b = 1 + static_cast<long>(rng.below(9));
        const Rational s(static_cast<long>(rng.below(13)) - 6, 1 + static_cast<long>(rng.below(4)));
        const Rational t(static_cast<long>(rng.below(13)) - 6, 1 + static_cast<long>(rng.below(4)));
        const LinearMapQ f(a, b, t);
        CHECK(rc(s + Rational(b), f) == rc(s, f).mul_monomial({a, b}, 1));
    }
}

TEST_CASE("inverse_map") {
    const LinearMapQ f1 = inverse_map(LinearMapQ(3, 5, Rational(0)));
    CHECK(f1.a == 5);
    CHECK(f1.b == 3);
    CHECK(f1.t == Rational(0));

    const LinearMapQ f2(2, 3, Rational(1, 2));
    const LinearMapQ g2 = inverse_map(f2);
    CHECK(g2.a == 3);
    CHECK(g2.b == 2);
    CHECK(g2.t == Rational(-1, 2));
    CHECK(g2(f2(Rational(7))) == Rational(7));

    const LinearMapQ f3(-2, 3, Rational(1));
    const LinearMapQ g3 = inverse_map(f3);
    CHECK(g3.a == -3);
    CHECK(g3.b == 2);
    CHECK(g3.t == Rational(1));
    CHECK(g3(f3(Rational(7))) == Rational(7));

    CHECK_THROWS_AS(inverse_map(LinearMapQ(0, 2, Rational(1))), ZeroSlopeError);
}

TEST_CASE("dedekind_carlitz examples") {
    CHECK(dedekind_carlitz(5, 1).is_zero());
    CHECK(dedekind_carlitz(1, 3) == LaurentPoly2::one() + mono(0, 1));
}

TEST_CASE("v * c(u,v,a,b) = rc(0, (a,b,0)) - 1 for all a,b <= 12") {
    for (long a = 1; a <= 12; ++a) {
        for (long b = 1; b <= 12; ++b) {
            const LaurentPoly2 lhs = dedekind_carlitz(a, b).mul_monomial({0, 1}, 1);
            const LaurentPoly2 rhs =
                rc(Rational(0), LinearMapQ(a, b, Rational(0))) - LaurentPoly2::one();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("segment_lattice_point") {
    const auto origin = segment_lattice_point(Rational(0), Rational(0), 3, 5);
    REQUIRE(origin.has_value());
    CHECK(origin->first == 0);
    CHECK(origin->second == 0);

    const auto diag = segment_lattice_point(Rational(1, 2), Rational(1, 2), 1, 1);
    REQUIRE(diag.has_value());
    CHECK(diag->first == 1);
    CHECK(diag->second == 1);

    CHECK_FALSE(segment_lattice_point(Rational(0), Rational(1, 2), 2, 3).has_value());

    // t = 3 * 1/3 = 1 is an integer, so a point exists.
    const auto third = segment_lattice_point(Rational(0), Rational(1, 3), 2, 3);
    REQUIRE(third.has_value());
    // It lies on the segment: c in [0, 3) and d = (2c + 1)/3.
    CHECK(third->first >= 0);
    CHECK(third->first < 3);
    CHECK((Int(2) * third->first + 1) % 3 == 0);

    CHECK_THROWS_AS(segment_lattice_point(Rational(0), Rational(0), 2, 4), NotCoprimeError);
}

TEST_CASE("segment_lattice_point matches a direct scan") {
    SplitMix64 rng(23);
    for (int i = 0; i < 200; ++i) {
        long a = 1 + static_cast<long>(rng.below(9));
        long b = 1 + static_cast<long>(rng.below(9));
        while (gcd(Int(a), Int(b)) != 1) {
            a = 1 + static_cast<long>(rng.below(9));
            b = 1 + static_cast<long>(rng.below(9));
        }
        const Rational p(static_cast<long>(rng.below(13)) - 6, 1 + static_cast<long>(rng.below(3)));
        Rational q(static_cast<long>(rng.below(13)) - 6, 1 + static_cast<long>(rng.below(3)));
        if (i % 2 == 0)
            q = (Rational(a) * p + Rational(static_cast<long>(rng.below(9)) - 4)) / Rational(b);

        // Scan integer abscissas in [p, p+b) for a point on the line.
        std::optional<std::pair<Int, Int>> expected;
        for (Int c = ceil(p); Rational(c) < p + Rational(b); ++c) {
            const Rational d = (Rational(a) * (Rational(c) - p)) / Rational(b) + q;
            if (d.is_integer()) {
                expected = std::make_pair(c, d.num());
                break;
            }
        }
        CHECK(segment_lattice_point(p, q, a, b) == expected);
    }
}

TEST_CASE("verify_thm1 examples") {
    CHECK(verify_thm1(1, 1, Rational(0), Rational(0)).holds);
    CHECK(verify_thm1(2, 7, Rational(1, 3), Rational(-1, 4)).holds);

    const VerificationReport rep = verify_thm1(3, 5, Rational(0), Rational(0));
    CHECK(rep.holds);
    CHECK_FALSE(rep.diff.has_value());

    // Both sides reduce to 1 - u^5 v^3 - (1-u)(1-v).
    const LaurentPoly2 one = LaurentPoly2::one();
    const LaurentPoly2 u = mono(1, 0);
    const LaurentPoly2 v = mono(0, 1);
    const LaurentPoly2 display = one - mono(5, 3) - (one - u) * (one - v);
    const LinearMapQ f(3, 5, Rational(0));
    const LaurentPoly2 lhs =
        v * (one - u) * rc(Rational(0), f).transpose() +
        u * (one - v) * rc(Rational(0), inverse_map(f));
    CHECK(lhs == display);

    CHECK_THROWS_AS(verify_thm1(2, 4, Rational(0), Rational(0)), NotCoprimeError);
}

TEST_CASE("verify_thm1 over the parameter grid") {
    const std::vector<Rational> grid = {Rational(-2),   Rational(-5, 4), Rational(-1, 2),
                                        Rational(0),    Rational(1, 3),  Rational(3, 4),
                                        Rational(2)};
    int chi_one = 0;
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b) {
            if (gcd(Int(a), Int(b)) != 1) continue;
            for (const Rational& p : grid)
                for (const Rational& q : grid) {
                    const VerificationReport rep = verify_thm1(a, b, p, q);
                    CHECK(rep.holds);
                    if (rep.notes.find("chi=1") != std::string::npos) ++chi_one;
                }
        }
    CHECK(chi_one > 0);
}

TEST_CASE("verify_carlitz_reciprocity examples") {
    CHECK(verify_carlitz_reciprocity(1, 1).holds);
    CHECK(verify_carlitz_reciprocity(1, 3).holds);
    CHECK(verify_carlitz_reciprocity(5, 8).holds);
    CHECK_THROWS_AS(verify_carlitz_reciprocity(6, 9), NotCoprimeError);

    // (1,3): (v-1)(1+v) + 0 = v^2 - 1 matches u^0 v^2 - 1.
    const LaurentPoly2 lhs =
        (mono(0, 1) - LaurentPoly2::one()) * dedekind_carlitz(1, 3);
    CHECK(lhs == mono(0, 2) - LaurentPoly2::one());
}

TEST_CASE("Carlitz reciprocity is the p=q=0 case of the polynomial identity") {
    const LaurentPoly2 one = LaurentPoly2::one();
    const LaurentPoly2 u = mono(1, 0);
    const LaurentPoly2 v = mono(0, 1);
    for (long a = 1; a <= 12; ++a) {
        for (long b = 1; b <= 12; ++b) {
            if (gcd(Int(a), Int(b)) != 1) continue;
            const LinearMapQ f(a, b, Rational(0));
            const LaurentPoly2 lhs = v * (one - u) * rc(Rational(0), f).transpose() +
                                     u * (one - v) * rc(Rational(0), inverse_map(f));
            // Peel off the k = ceil(s) = 0 terms and divide by -uv.
            const LaurentPoly2 shifted = lhs - v * (one - u) - u * (one - v);
            const LaurentPoly2 chain = shifted.mul_monomial({-1, -1}, -1);
            const LaurentPoly2 expected =
                (u - one) * dedekind_carlitz(a, b).transpose() +
                (v - one) * dedekind_carlitz(b, a);
            CHECK(chain == expected);
            CHECK(chain == mono(b - 1, a - 1) - one);
        }
    }
}

TEST_CASE("report invariant: holds iff diff absent") {
    const VerificationReport good = verify_carlitz_reciprocity(3, 5);
    CHECK(good.holds);
    CHECK_FALSE(good.diff.has_value());
}
