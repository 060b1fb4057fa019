#include "rcpoly/laurent.hpp"

#include <sstream>

#include <json.hpp>

namespace rcpoly {

LaurentPoly2 LaurentPoly2::monomial(ExponentPair e, Int c) {
    LaurentPoly2 p;
    if (sgn(c) != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

Int LaurentPoly2::coeff(const ExponentPair& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(const ExponentPair& e, const Int& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    if (a.is_zero() || b.is_zero()) return r;
    // Iterate the smaller factor on the outside.
    const LaurentPoly2& outer = a.term_count() <= b.term_count() ? a : b;
    const LaurentPoly2& inner = a.term_count() <= b.term_count() ? b : a;
    Int prod;
    for (const auto& [ea, ca] : outer.terms_) {
        for (const auto& [eb, cb] : inner.terms_) {
            prod = ca * cb;
            r.add_term(ea + eb, prod);
        }
    }
    return r;
}

LaurentPoly2 LaurentPoly2::mul_monomial(const ExponentPair& e, const Int& c) const {
    LaurentPoly2 r;
    if (sgn(c) == 0) return r;
    for (const auto& [te, tc] : terms_) r.terms_.emplace(te + e, tc * c);
    return r;
}

LaurentPoly2 LaurentPoly2::transpose() const {
    LaurentPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(ExponentPair{e.ev, e.eu}, c);
    return r;
}

Rational rational_pow(const Rational& x, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (x.is_zero()) {
        if (e < 0) throw ZeroBaseError("negative exponent at zero base");
        return Rational(0);
    }
    const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), x.num().get_mpz_t(), ue);
    mpz_pow_ui(pd.get_mpz_t(), x.den().get_mpz_t(), ue);
    return e > 0 ? Rational(pn, pd) : Rational(pd, pn);
}

Rational LaurentPoly2::eval(const Rational& x, const Rational& y) const {
    Rational sum;
    for (const auto& [e, c] : terms_)
        sum += Rational(c) * rational_pow(x, e.eu) * rational_pow(y, e.ev);
    return sum;
}

namespace {

void append_power(std::ostream& os, std::string_view var, std::int64_t e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) os << "*";
    first_factor = false;
    os << var;
    if (e != 1) os << "^" << e;
}

}  // namespace

std::string LaurentPoly2::to_text(std::string_view var1, std::string_view var2) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = sgn(c) < 0;
        Int abs_c = abs(c);
        if (first_term) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first_term = false;
        bool first_factor = true;
        if (abs_c != 1 || (e.eu == 0 && e.ev == 0)) {
            os << abs_c.get_str();
            first_factor = false;
        }
        append_power(os, var1, e.eu, first_factor);
        append_power(os, var2, e.ev, first_factor);
    }
    return os.str();
}

std::string LaurentPoly2::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "{\"eu\":" << e.eu << ",\"ev\":" << e.ev << ",\"c\":\"" << c.get_str() << "\"}";
    }
    os << "]";
    return os.str();
}

LaurentPoly2 LaurentPoly2::from_json(std::string_view json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
    LaurentPoly2 p;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("eu") || !t.contains("ev") || !t.contains("c"))
            throw ParseError("polynomial JSON term must have eu, ev, c");
        ExponentPair e{t["eu"].get<std::int64_t>(), t["ev"].get<std::int64_t>()};
        p.add_term(e, Int(t["c"].get<std::string>(), 10));
    }
    return p;
}

}  // namespace rcpoly
