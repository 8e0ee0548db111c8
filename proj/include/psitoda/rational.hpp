#ifndef PSITODA_RATIONAL_HPP
#define PSITODA_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "psitoda/error.hpp"

namespace psitoda {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator; zero is 0/1. Serializes as "p/q" ("p" when q = 1).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    explicit Rational(const Integer &n) : v_(n) {}
    Rational(const Integer &num, const Integer &den) : v_(num, den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational from_string(const std::string &s);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(::abs(v_)); }

    std::string str() const;
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DomainError("Rational: inverse of zero");
        return Rational(den(), num());
    }

    Rational pow(unsigned long e) const;

  private:
    explicit Rational(const mpq_class &q) : v_(q) {}
    mpq_class v_; // kept canonical by GMP
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace psitoda

#endif
