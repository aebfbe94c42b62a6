#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "cmspace/errors.hpp"

namespace cm {

// Exact rational scalar over arbitrary-precision integers.
//
// Canonical form is maintained at all times: denominator > 0 and
// gcd(|numerator|, denominator) = 1.  The GMP mpq layer guarantees this for
// the results of arithmetic provided the operands are canonical, so the only
// places that canonicalize explicitly are the raw constructors and the
// string parser.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "n" or "n/d" with an optional leading minus sign; rejects
    // anything else (whitespace, signs after '/', empty fields, d = 0).
    static Rational from_string(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // True iff the canonical-form invariants hold; arithmetic preserves them,
    // so this is only consulted by debug assertions and tests.
    bool is_canonical() const {
        return mpz_sgn(mpq_denref(v_.get_mpq_t())) > 0 &&
               mpz_cmp_ui(mpq_denref(v_.get_mpq_t()), 0) != 0 &&
               [&] {
                   mpz_class g;
                   mpz_gcd(g.get_mpz_t(), mpq_numref(v_.get_mpq_t()),
                           mpq_denref(v_.get_mpq_t()));
                   return sgn(v_) == 0 ? v_.get_den() == 1 : g == 1;
               }();
    }

    Rational inverse() const {
        if (is_zero())
            throw DivisionByZero("inverse of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rational(std::move(r));
    }

    // "n" or "n/d", lowest terms.
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        mpq_class r;
        mpq_neg(r.get_mpq_t(), a.v_.get_mpq_t());
        return Rational(std::move(r));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
    const auto bad = [&] {
        return ParseError("malformed rational '" + std::string(s) + "'");
    };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) throw bad();
    mpz_class num(std::string(s.substr(0, i)), 10);
    if (i == s.size()) return Rational(num, mpz_class(1));
    if (s[i] != '/') throw bad();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) throw bad();
    mpz_class den(std::string(s.substr(den_begin)), 10);
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(num, den);
}

inline Rational pow(const Rational& base, long exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Rational r(1), b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace cm
