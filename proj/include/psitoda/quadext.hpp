#ifndef PSITODA_QUADEXT_HPP
#define PSITODA_QUADEXT_HPP

#include <iosfwd>
#include <string>

#include "psitoda/rational.hpp"

namespace psitoda {

/// Element a + b*theta of a quadratic extension with theta^2 = r.
///
/// The defining value r is part of the identity: theta is never collapsed to
/// a rational even when r is a perfect square, so branch choices like the
/// two square roots of -3/4 stay distinct and explicit. Two values compare
/// equal iff they have the same r and equal components. Values with b = 0
/// mix freely with any r (the embedded rationals).
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), r_(0) {}
    QuadExt(Rational a, Rational b, Rational r) : a_(std::move(a)), b_(std::move(b)), r_(std::move(r)) {}
    /// The embedded rational a + 0*theta (usable with any r).
    QuadExt(const Rational &a) : a_(a), b_(0), r_(0) {}
    QuadExt(int a) : a_(a), b_(0), r_(0) {}
    /// theta itself for a given r.
    static QuadExt theta(const Rational &r) { return QuadExt(Rational(0), Rational(1), r); }

    const Rational &a() const { return a_; }
    const Rational &b() const { return b_; }
    const Rational &r() const { return r_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    const Rational &rational_value() const {
        if (!is_rational()) throw DomainError("QuadExt: value is not rational");
        return a_;
    }

    QuadExt conj() const { return QuadExt(a_, -b_, r_); }
    /// a^2 - b^2 r; zero exactly when the value has no inverse.
    Rational norm() const { return a_ * a_ - b_ * b_ * r_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, r_); }

    friend QuadExt operator+(const QuadExt &x, const QuadExt &y) {
        Rational r = merged_r(x, y, "+");
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, r);
    }
    friend QuadExt operator-(const QuadExt &x, const QuadExt &y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt &x, const QuadExt &y) {
        Rational r = merged_r(x, y, "*");
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * r, x.a_ * y.b_ + x.b_ * y.a_, r);
    }
    friend QuadExt operator/(const QuadExt &x, const QuadExt &y) {
        Rational r = merged_r(x, y, "/");
        Rational n = y.a_ * y.a_ - y.b_ * y.b_ * r;
        if (n.is_zero()) throw DomainError("QuadExt: division by zero divisor (a^2 - b^2 r = 0)");
        QuadExt num(x.a_ * y.a_ - x.b_ * y.b_ * r, x.b_ * y.a_ - x.a_ * y.b_, r);
        return QuadExt(num.a_ / n, num.b_ / n, r);
    }

    QuadExt &operator+=(const QuadExt &o) { return *this = *this + o; }
    QuadExt &operator-=(const QuadExt &o) { return *this = *this - o; }
    QuadExt &operator*=(const QuadExt &o) { return *this = *this * o; }
    QuadExt &operator/=(const QuadExt &o) { return *this = *this / o; }

    // Structural equality: same r and componentwise equal (b = 0 values are
    // rationals, equal across r's).
    friend bool operator==(const QuadExt &x, const QuadExt &y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.r_ == y.r_;
    }
    friend bool operator!=(const QuadExt &x, const QuadExt &y) { return !(x == y); }

    std::string str() const;

  private:
    // Arithmetic is closed for a fixed r; rationals (b = 0) adopt the other
    // operand's extension.
    static Rational merged_r(const QuadExt &x, const QuadExt &y, const char *op) {
        if (x.b_.is_zero()) return y.r_;
        if (y.b_.is_zero()) return x.r_;
        if (x.r_ != y.r_)
            throw DomainError(std::string("QuadExt: mixed extensions in '") + op + "': r=" +
                              x.r_.str() + " vs r=" + y.r_.str());
        return x.r_;
    }

    Rational a_, b_, r_;
};

std::ostream &operator<<(std::ostream &os, const QuadExt &q);

} // namespace psitoda

#endif
