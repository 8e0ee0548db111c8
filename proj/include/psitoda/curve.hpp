#ifndef PSITODA_CURVE_HPP
#define PSITODA_CURVE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psitoda/multipoly.hpp"
#include "psitoda/quadext.hpp"
#include "psitoda/upoly.hpp"

namespace psitoda {

/// Elliptic curve y^2 = f(x) = x^3 + l2 x^2 + l1 x + l0.
///
/// Coefficients may be bound to rationals or left symbolic (they then appear
/// as the variables l0..l2 inside CurveElement polynomials). Non-square-free
/// f is accepted (nodal model); the singular point is rejected where it
/// matters, not here.
class EllipticCurve {
  public:
    /// Fully symbolic curve.
    EllipticCurve() = default;
    EllipticCurve(const Rational &l0, const Rational &l1, const Rational &l2)
        : lambda_{l0, l1, l2} {}

    static EllipticCurve symbolic() { return EllipticCurve(); }

    bool numeric() const { return lambda_[0] && lambda_[1] && lambda_[2]; }
    const std::optional<Rational> &lambda(int i) const { return lambda_.at(static_cast<std::size_t>(i)); }

    /// f as a MultiPoly (unbound lambdas appear symbolically).
    MultiPoly f() const;
    /// f as a dense univariate polynomial; numeric curves only.
    UPoly f_upoly() const;

    /// Rational roots of f with multiplicities (numeric curves only).
    std::vector<std::pair<Rational, int>> branch_points() const;
    /// True iff f is not square-free (numeric curves; symbolic is generic).
    bool is_nodal() const;

    /// Binding array for MultiPoly::eval with the lambdas filled in.
    std::array<std::optional<Rational>, kNumVars> binding(const Rational &x) const;

    friend bool operator==(const EllipticCurve &a, const EllipticCurve &b) {
        return a.lambda_ == b.lambda_;
    }
    friend bool operator!=(const EllipticCurve &a, const EllipticCurve &b) { return !(a == b); }

    std::string str() const;

  private:
    std::array<std::optional<Rational>, 3> lambda_{}; // l0, l1, l2
};

/// Canonical residue P(x) + Q(x)*y in the coordinate ring
/// Q[l][x, y] / (y^2 - f(x)). Any y^2 is reduced away on construction, so
/// equality is componentwise equality of the two parts.
class CurveElement {
  public:
    CurveElement() = default;
    static CurveElement zero(const EllipticCurve &c) { return CurveElement(c, {}, {}); }
    static CurveElement one(const EllipticCurve &c);
    static CurveElement constant(const EllipticCurve &c, const Rational &r);
    static CurveElement x(const EllipticCurve &c);
    static CurveElement y(const EllipticCurve &c);
    static CurveElement from_parts(const EllipticCurve &c, MultiPoly p, MultiPoly q);
    /// Reduce sum_k coeffs[k] * y^k to canonical form via y^2 -> f.
    static CurveElement from_y_powers(const EllipticCurve &c, const std::vector<MultiPoly> &coeffs);

    const MultiPoly &p_part() const { return p_; }
    const MultiPoly &q_part() const { return q_; }
    const EllipticCurve &curve() const { return curve_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    CurveElement operator-() const { return CurveElement(curve_, -p_, -q_); }
    friend CurveElement operator+(const CurveElement &a, const CurveElement &b);
    friend CurveElement operator-(const CurveElement &a, const CurveElement &b);
    friend CurveElement operator*(const CurveElement &a, const CurveElement &b);
    CurveElement &operator+=(const CurveElement &o) { return *this = *this + o; }
    CurveElement &operator-=(const CurveElement &o) { return *this = *this - o; }
    CurveElement &operator*=(const CurveElement &o) { return *this = *this * o; }
    friend bool operator==(const CurveElement &a, const CurveElement &b) {
        return a.curve_ == b.curve_ && a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const CurveElement &a, const CurveElement &b) { return !(a == b); }

    CurveElement scaled(const Rational &c) const { return CurveElement(curve_, p_.scaled(c), q_.scaled(c)); }
    CurveElement pow(unsigned e) const;

    /// d/du with d/du = 2y d/dx: D(P + Qy) = (2Q'f + Qf') + (2P')y.
    CurveElement derivation() const;

    /// Exact division by psi_2 = -2y. Throws InternalError when the division
    /// is not exact in the ring (cannot happen for valid recursion inputs).
    CurveElement divided_by_minus_2y() const;

    std::string str() const;

  private:
    CurveElement(EllipticCurve c, MultiPoly p, MultiPoly q)
        : curve_(std::move(c)), p_(std::move(p)), q_(std::move(q)) {}
    void check_same_curve(const CurveElement &o) const;

    EllipticCurve curve_;
    MultiPoly p_, q_;
};

/// An exact point (x0, y0) with y0 in a quadratic extension, standing in for
/// the transcendental parameter u. The branch (sign of y0) is part of the
/// identity of the point.
class PointValue {
  public:
    PointValue(const EllipticCurve &c, const Rational &x0, const QuadExt &y0);

    /// The point with y0 = theta, theta^2 = f(x0).
    static PointValue on_sqrt_branch(const EllipticCurve &c, const Rational &x0);

    const EllipticCurve &curve() const { return curve_; }
    const Rational &x0() const { return x0_; }
    const QuadExt &y0() const { return y0_; }

    PointValue conjugate_branch() const { return PointValue(curve_, x0_, -y0_); }

  private:
    EllipticCurve curve_;
    Rational x0_;
    QuadExt y0_;
};

/// P(x0) + Q(x0) * y0 in the extension of y0; numeric curve required.
QuadExt element_eval(const CurveElement &a, const PointValue &pt);

} // namespace psitoda

#endif
