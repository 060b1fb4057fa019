#include "rcpoly/rational.hpp"

#include <cctype>
#include <ostream>

namespace rcpoly {

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return ParseError("invalid rational: '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    const auto digits = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    std::size_t num_end = digits(pos);
    if (num_end == pos) throw bad();
    Int num(std::string(text.substr(pos, num_end - pos)), 10);
    Int den(1);
    if (num_end < text.size()) {
        if (text[num_end] != '/') throw bad();
        std::size_t den_begin = num_end + 1;
        std::size_t den_end = digits(den_begin);
        if (den_end != text.size() || den_end == den_begin) throw bad();
        den = Int(std::string(text.substr(den_begin, den_end - den_begin)), 10);
        if (sgn(den) == 0) throw bad();
    }
    if (neg) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Int floor(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Int ceil(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Rational frac(const Rational& x) {
    return x - Rational(floor(x));
}

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return frac(x) - Rational(1, 2);
}

Rational bracket_mod(const Rational& x, const Int& m) {
    if (m < 1)
        throw Error("bracket_mod: modulus must be positive");
    const Rational mr{m};
    return x - mr * Rational(floor(x / mr));
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1)
        throw Error("mod_inverse: modulus must be positive");
    if (m == 1) return Int(0);
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotCoprimeError("mod_inverse: " + a.get_str() + " is not invertible mod " + m.get_str());
    return r;
}

Rational bernoulli2_periodized(const Rational& x) {
    const Rational f = frac(x);
    return f * f - f + Rational(1, 6);
}

}  // namespace rcpoly
