#include "psitoda/curve.hpp"

#include <sstream>

#include "psitoda/error.hpp"

namespace psitoda {

MultiPoly EllipticCurve::f() const {
    MultiPoly f = MultiPoly::x_power(Rational(1), 3);
    const Var lvars[3] = {Var::L0, Var::L1, Var::L2};
    for (int i = 0; i < 3; ++i) {
        MultiPoly c = lambda_[static_cast<std::size_t>(i)]
                          ? MultiPoly::constant(*lambda_[static_cast<std::size_t>(i)])
                          : MultiPoly::variable(lvars[i]);
        f += c * MultiPoly::x_power(Rational(1), i);
    }
    return f;
}

UPoly EllipticCurve::f_upoly() const {
    if (!numeric()) throw DomainError("EllipticCurve: lambdas are symbolic");
    return {*lambda_[0], *lambda_[1], *lambda_[2], Rational(1)};
}

std::vector<std::pair<Rational, int>> EllipticCurve::branch_points() const {
    return rational_roots(f());
}

bool EllipticCurve::is_nodal() const {
    if (!numeric()) return false;
    return !up_square_free(f_upoly());
}

std::array<std::optional<Rational>, kNumVars> EllipticCurve::binding(const Rational &x) const {
    std::array<std::optional<Rational>, kNumVars> b{};
    b[static_cast<int>(Var::X)] = x;
    b[static_cast<int>(Var::L0)] = lambda_[0];
    b[static_cast<int>(Var::L1)] = lambda_[1];
    b[static_cast<int>(Var::L2)] = lambda_[2];
    return b;
}

std::string EllipticCurve::str() const {
    std::ostringstream os;
    os << "y^2 = " << f().str();
    return os.str();
}

CurveElement CurveElement::one(const EllipticCurve &c) { return constant(c, Rational(1)); }

CurveElement CurveElement::constant(const EllipticCurve &c, const Rational &r) {
    return CurveElement(c, MultiPoly::constant(r), {});
}

CurveElement CurveElement::x(const EllipticCurve &c) {
    return CurveElement(c, MultiPoly::variable(Var::X), {});
}

CurveElement CurveElement::y(const EllipticCurve &c) {
    return CurveElement(c, {}, MultiPoly::constant(Rational(1)));
}

CurveElement CurveElement::from_parts(const EllipticCurve &c, MultiPoly p, MultiPoly q) {
    for (const auto &part : {p, q})
        for (Var v : {Var::L3, Var::L4})
            if (part.uses(v)) throw DomainError("CurveElement: genus-2 coefficient variable");
    return CurveElement(c, std::move(p), std::move(q));
}

CurveElement CurveElement::from_y_powers(const EllipticCurve &c, const std::vector<MultiPoly> &coeffs) {
    MultiPoly p, q;
    const MultiPoly f = c.f();
    MultiPoly fpow = MultiPoly::constant(Rational(1)); // f^(k/2) accumulated
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k >= 2 && k % 2 == 0) fpow *= f;
        if (k % 2 == 0)
            p += coeffs[k] * fpow;
        else
            q += coeffs[k] * fpow;
    }
    return CurveElement(c, std::move(p), std::move(q));
}

void CurveElement::check_same_curve(const CurveElement &o) const {
    if (curve_ != o.curve_) throw DomainError("CurveElement: mixed curves");
}

CurveElement operator+(const CurveElement &a, const CurveElement &b) {
    a.check_same_curve(b);
    return CurveElement(a.curve_, a.p_ + b.p_, a.q_ + b.q_);
}

CurveElement operator-(const CurveElement &a, const CurveElement &b) {
    a.check_same_curve(b);
    return CurveElement(a.curve_, a.p_ - b.p_, a.q_ - b.q_);
}

CurveElement operator*(const CurveElement &a, const CurveElement &b) {
    a.check_same_curve(b);
    // (Pa + Qa y)(Pb + Qb y) = PaPb + QaQb f + (PaQb + QaPb) y
    MultiPoly p = a.p_ * b.p_;
    MultiPoly qq = a.q_ * b.q_;
    if (!qq.is_zero()) p += qq * a.curve_.f();
    return CurveElement(a.curve_, std::move(p), a.p_ * b.q_ + a.q_ * b.p_);
}

CurveElement CurveElement::pow(unsigned e) const {
    CurveElement r = one(curve_);
    CurveElement base = *this;
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

CurveElement CurveElement::derivation() const {
    const MultiPoly f = curve_.f();
    const MultiPoly fprime = f.derivative(Var::X);
    MultiPoly p = q_.derivative(Var::X) * f * MultiPoly::constant(Rational(2)) + q_ * fprime;
    MultiPoly q = p_.derivative(Var::X).scaled(Rational(2));
    return CurveElement(curve_, std::move(p), std::move(q));
}

CurveElement CurveElement::divided_by_minus_2y() const {
    // (P + Qy)/y = Q + (P/f) y, exact iff f | P.
    auto pf = p_.divided_exactly_by(curve_.f());
    if (!pf) throw InternalError("CurveElement: division by -2y not exact");
    return CurveElement(curve_, q_.scaled(Rational(-1, 2)), pf->scaled(Rational(-1, 2)));
}

std::string CurveElement::str() const {
    std::ostringstream os;
    if (q_.is_zero()) return p_.str();
    os << p_.str() << " + (" << q_.str() << ")*y";
    return os.str();
}

PointValue::PointValue(const EllipticCurve &c, const Rational &x0, const QuadExt &y0)
    : curve_(c), x0_(x0), y0_(y0) {
    if (!c.numeric()) throw DomainError("PointValue: curve must be numeric");
    Rational fx = up_eval(c.f_upoly(), x0);
    // y0^2 must be exactly rational and equal f(x0)
    QuadExt sq = y0 * y0;
    if (!sq.is_rational() || sq.rational_value() != fx)
        throw DomainError("PointValue: y0^2 != f(x0)");
}

PointValue PointValue::on_sqrt_branch(const EllipticCurve &c, const Rational &x0) {
    Rational fx = up_eval(c.f_upoly(), x0);
    return PointValue(c, x0, QuadExt::theta(fx));
}

QuadExt element_eval(const CurveElement &a, const PointValue &pt) {
    if (a.curve() != pt.curve()) throw DomainError("element_eval: point on a different curve");
    if (!a.curve().numeric()) throw DomainError("element_eval: symbolic lambdas unbound");
    auto binding = a.curve().binding(pt.x0());
    Rational p = a.p_part().eval(binding);
    Rational q = a.q_part().eval(binding);
    return QuadExt(p) + QuadExt(q) * pt.y0();
}

} // namespace psitoda
