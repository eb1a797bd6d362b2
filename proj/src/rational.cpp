#include "dglpp/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace dglpp {

Integer Integer::parse(std::string_view text) {
    Integer r;
    std::string buf(text);
    if (buf.empty() || mpz_set_str(r.v_, buf.c_str(), 10) != 0)
        throw std::invalid_argument("Integer::parse: bad integer literal '" + buf + "'");
    return r;
}

std::string Integer::str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.raw());
    mpz_set(mpq_denref(v_), den.raw());
    mpq_canonicalize(v_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    Integer num = Integer::parse(text.substr(0, slash));
    Integer den = Integer::parse(text.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.v_, v_, o.v_);
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), e);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), e);
    return r;  // canonical since the base was canonical
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace dglpp
