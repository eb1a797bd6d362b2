#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dglpp {

// Arbitrary-precision signed integer. Thin value-semantics wrapper over
// GMP's mpz_t; only the operations the engine needs.
class Integer {
public:
    Integer() { mpz_init(v_); }
    Integer(long x) { mpz_init_set_si(v_, x); }
    Integer(unsigned long x) { mpz_init_set_ui(v_, x); }
    Integer(int x) : Integer(static_cast<long>(x)) {}
    Integer(const Integer& o) { mpz_init_set(v_, o.v_); }
    Integer(Integer&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Integer() { mpz_clear(v_); }

    static Integer parse(std::string_view text);
    static Integer binomial(unsigned long n, unsigned long k) {
        Integer r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }
    static Integer factorial(unsigned long n) {
        Integer r;
        mpz_fac_ui(r.v_, n);
        return r;
    }

    Integer operator+(const Integer& o) const { Integer r; mpz_add(r.v_, v_, o.v_); return r; }
    Integer operator-(const Integer& o) const { Integer r; mpz_sub(r.v_, v_, o.v_); return r; }
    Integer operator*(const Integer& o) const { Integer r; mpz_mul(r.v_, v_, o.v_); return r; }
    Integer operator-() const { Integer r; mpz_neg(r.v_, v_); return r; }
    Integer& operator+=(const Integer& o) { mpz_add(v_, v_, o.v_); return *this; }
    Integer& operator-=(const Integer& o) { mpz_sub(v_, v_, o.v_); return *this; }
    Integer& operator*=(const Integer& o) { mpz_mul(v_, v_, o.v_); return *this; }

    // Quotient of an exact division; the caller guarantees divisibility.
    Integer div_exact(const Integer& o) const {
        Integer r;
        mpz_divexact(r.v_, v_, o.v_);
        return r;
    }
    Integer lcm(const Integer& o) const { Integer r; mpz_lcm(r.v_, v_, o.v_); return r; }
    Integer pow(unsigned long e) const { Integer r; mpz_pow_ui(r.v_, v_, e); return r; }

    int compare(const Integer& o) const { return mpz_cmp(v_, o.v_); }
    bool operator==(const Integer& o) const { return compare(o) == 0; }
    bool operator!=(const Integer& o) const { return compare(o) != 0; }
    bool operator<(const Integer& o) const { return compare(o) < 0; }
    bool operator<=(const Integer& o) const { return compare(o) <= 0; }
    bool operator>(const Integer& o) const { return compare(o) > 0; }
    bool operator>=(const Integer& o) const { return compare(o) >= 0; }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool fits_ulong() const { return mpz_fits_ulong_p(v_) != 0; }
    unsigned long to_ulong() const { return mpz_get_ui(v_); }
    double to_double() const { return mpz_get_d(v_); }
    std::string str() const;

    const mpz_t& raw() const { return v_; }
    mpz_t& raw() { return v_; }

private:
    mpz_t v_;
};

// Exact fraction with arbitrary-precision numerator and denominator.
// Invariant (maintained by GMP canonicalization): denominator > 0 and
// gcd(|num|, den) = 1. No operation ever rounds.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long num) {
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
    }
    Rational(int num) : Rational(static_cast<long>(num)) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const Integer& num) {
        mpq_init(v_);
        mpq_set_z(v_, num.raw());
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    // "p/q" or "p"; whitespace is not accepted.
    static Rational parse(std::string_view text);

    Rational operator+(const Rational& o) const { Rational r; mpq_add(r.v_, v_, o.v_); return r; }
    Rational operator-(const Rational& o) const { Rational r; mpq_sub(r.v_, v_, o.v_); return r; }
    Rational operator*(const Rational& o) const { Rational r; mpq_mul(r.v_, v_, o.v_); return r; }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { Rational r; mpq_neg(r.v_, v_); return r; }
    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    // Nonnegative exponents only; pow(0) = 1 including for zero.
    Rational pow(unsigned long e) const;
    Rational abs() const { Rational r; mpq_abs(r.v_, v_); return r; }
    Rational inverse() const;

    int compare(const Rational& o) const { return mpq_cmp(v_, o.v_); }
    bool operator==(const Rational& o) const { return mpq_equal(v_, o.v_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }
    Integer numerator() const {
        Integer r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    Integer denominator() const {
        Integer r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }
    double to_double() const { return mpq_get_d(v_); }
    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace dglpp
