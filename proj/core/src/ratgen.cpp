#include "rcpoly/ratgen.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace rcpoly {

namespace {

bool is_canonical(const ExponentPair& g) {
    return g.eu > 0 || (g.eu == 0 && g.ev > 0);
}

}  // namespace

DenomFactor::DenomFactor(ExponentPair e) : g(e) {
    if (!is_canonical(g))
        throw Error("denominator factor is not canonically oriented");
}

CanonicalizedFactor canonicalize_factor(ExponentPair g) {
    if (g.eu == 0 && g.ev == 0)
        throw ZeroVectorError("denominator factor with zero exponent vector");
    if (is_canonical(g))
        return {DenomFactor(g), ExponentPair{0, 0}, +1};
    return {DenomFactor(-g), g, -1};
}

GFTerm make_gf_term(LaurentPoly2 num, const std::vector<ExponentPair>& raw_factors) {
    GFTerm t;
    for (const ExponentPair& g : raw_factors) {
        CanonicalizedFactor cf = canonicalize_factor(g);
        if (cf.sign < 0) num = num.mul_monomial(-cf.shift, Int(-1));
        t.den.push_back(cf.factor);
    }
    std::sort(t.den.begin(), t.den.end(), FactorLess{});
    t.num = std::move(num);
    return t;
}

RationalGF gf_add(const RationalGF& a, const RationalGF& b) {
    RationalGF r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

RationalGF gf_negate(const RationalGF& a) {
    RationalGF r = a;
    for (GFTerm& t : r.terms) t.num = -t.num;
    return r;
}

RationalGF gf_mul_monomial(const RationalGF& a, const ExponentPair& e, const Int& c) {
    RationalGF r = a;
    for (GFTerm& t : r.terms) t.num = t.num.mul_monomial(e, c);
    return r;
}

RationalGF gf_invert_axis(const RationalGF& a, int axis) {
    const auto flip = [axis](const ExponentPair& e) {
        return axis == 0 ? ExponentPair{-e.eu, e.ev} : ExponentPair{e.eu, -e.ev};
    };
    RationalGF r;
    for (const GFTerm& t : a.terms) {
        LaurentPoly2 num;
        for (const auto& [e, c] : t.num.terms()) num.add_term(flip(e), c);
        std::vector<ExponentPair> raw;
        raw.reserve(t.den.size());
        for (const DenomFactor& f : t.den) raw.push_back(flip(f.g));
        r.terms.push_back(make_gf_term(std::move(num), raw));
    }
    return r;
}

GFTerm combine_over_common_denominator(const RationalGF& a) {
    // Multiset lcm: per distinct factor, the max multiplicity over all terms.
    std::map<DenomFactor, std::size_t, FactorLess> lcm;
    for (const GFTerm& t : a.terms) {
        std::map<DenomFactor, std::size_t, FactorLess> counts;
        for (const DenomFactor& f : t.den) ++counts[f];
        for (const auto& [f, n] : counts) {
            auto it = lcm.find(f);
            if (it == lcm.end())
                lcm.emplace(f, n);
            else
                it->second = std::max(it->second, n);
        }
    }

    LaurentPoly2 sum;
    for (const GFTerm& t : a.terms) {
        std::map<DenomFactor, std::size_t, FactorLess> counts;
        for (const DenomFactor& f : t.den) ++counts[f];
        LaurentPoly2 num = t.num;
        for (const auto& [f, n] : lcm) {
            const auto it = counts.find(f);
            const std::size_t have = it == counts.end() ? 0 : it->second;
            LaurentPoly2 factor = LaurentPoly2::one() - LaurentPoly2::monomial(f.g, 1);
            for (std::size_t k = have; k < n; ++k) num = num * factor;
        }
        sum += num;
    }

    GFTerm r;
    r.num = std::move(sum);
    for (const auto& [f, n] : lcm)
        for (std::size_t k = 0; k < n; ++k) r.den.push_back(f);
    return r;
}

bool gf_equal(const RationalGF& a, const RationalGF& b) {
    return combine_over_common_denominator(gf_add(a, gf_negate(b))).num.is_zero();
}

LaurentPoly2 divide_by_one_minus_monomial(const LaurentPoly2& p, const ExponentPair& g) {
    if (g.eu == 0 && g.ev == 0)
        throw ZeroVectorError("division by (1 - x^(0,0))");
    if (p.is_zero()) return LaurentPoly2::zero();

    // Group terms into lattice lines e0 + k*g; on each line the quotient
    // coefficients are prefix sums, and exactness means each line sums to zero.
    struct LineKeyLess {
        bool operator()(const ExponentPair& a, const ExponentPair& b) const {
            if (a.eu != b.eu) return a.eu < b.eu;
            return a.ev < b.ev;
        }
    };
    const auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    std::map<ExponentPair, std::map<std::int64_t, Int>, LineKeyLess> lines;
    for (const auto& [e, c] : p.terms()) {
        const std::int64_t k = g.eu != 0 ? floor_div(e.eu, g.eu) : floor_div(e.ev, g.ev);
        const ExponentPair base{e.eu - k * g.eu, e.ev - k * g.ev};
        lines[base][k] = c;
    }

    LaurentPoly2 q;
    for (const auto& [base, coeffs] : lines) {
        const std::int64_t kmin = coeffs.begin()->first;
        const std::int64_t kmax = coeffs.rbegin()->first;
        Int running(0);
        for (std::int64_t k = kmin; k < kmax; ++k) {
            auto it = coeffs.find(k);
            if (it != coeffs.end()) running += it->second;
            q.add_term(ExponentPair{base.eu + k * g.eu, base.ev + k * g.ev}, running);
        }
        running += coeffs.rbegin()->second;
        if (sgn(running) != 0)
            throw NotPolynomialError("division by (1 - x^g) leaves a remainder");
    }
    return q;
}

LaurentPoly2 gf_as_polynomial(const RationalGF& a) {
    GFTerm t = combine_over_common_denominator(a);
    LaurentPoly2 p = std::move(t.num);
    for (const DenomFactor& f : t.den) p = divide_by_one_minus_monomial(p, f.g);
    return p;
}

Rational gf_eval(const RationalGF& a, const Rational& x, const Rational& y) {
    Rational sum;
    for (const GFTerm& t : a.terms) {
        Rational value = t.num.eval(x, y);
        for (const DenomFactor& f : t.den) {
            const Rational fv =
                Rational(1) - rational_pow(x, f.g.eu) * rational_pow(y, f.g.ev);
            if (fv.is_zero())
                throw PoleError("denominator factor vanishes at the evaluation point");
            value /= fv;
        }
        sum += value;
    }
    return sum;
}

std::string RationalGF::to_json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first = true;
    for (const GFTerm& t : terms) {
        if (!first) os << ",";
        first = false;
        os << "{\"num\":" << t.num.to_json() << ",\"den\":[";
        bool ffirst = true;
        for (const DenomFactor& f : t.den) {
            if (!ffirst) os << ",";
            ffirst = false;
            os << "[" << f.g.eu << "," << f.g.ev << "]";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

RationalGF RationalGF::from_json(std::string_view json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad generating-function JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("generating-function JSON must have a terms array");
    RationalGF r;
    for (const auto& tj : j["terms"]) {
        GFTerm t;
        t.num = LaurentPoly2::from_json(tj.at("num").dump());
        for (const auto& fj : tj.at("den")) {
            if (!fj.is_array() || fj.size() != 2)
                throw ParseError("denominator factor must be a [eu, ev] pair");
            t.den.emplace_back(ExponentPair{fj[0].get<std::int64_t>(), fj[1].get<std::int64_t>()});
        }
        std::sort(t.den.begin(), t.den.end(), FactorLess{});
        r.terms.push_back(std::move(t));
    }
    return r;
}

std::string RationalGF::to_text(std::string_view var1, std::string_view var2) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const GFTerm& t : terms) {
        if (!first) os << " + ";
        first = false;
        if (t.den.empty()) {
            os << t.num.to_text(var1, var2);
            continue;
        }
        os << "(" << t.num.to_text(var1, var2) << ")/(";
        for (const DenomFactor& f : t.den) {
            os << "(1 - " << LaurentPoly2::monomial(f.g, 1).to_text(var1, var2) << ")";
        }
        os << ")";
    }
    return os.str();
}

}  // namespace rcpoly
