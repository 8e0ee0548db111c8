#include "psitoda/analytic.hpp"

#include <cmath>
#include <limits>

#include "psitoda/error.hpp"

namespace psitoda {

DepressedForm depress(const EllipticCurve &c) {
    if (!c.numeric()) throw DomainError("depress: numeric curve required");
    const Rational l0 = *c.lambda(0), l1 = *c.lambda(1), l2 = *c.lambda(2);
    DepressedForm d;
    d.shift = l2 / Rational(3);
    // y^2 = x^3 + l2 x^2 + l1 x + l0, x = X - l2/3:
    //   y^2 = X^3 + p X + q,  p = l1 - l2^2/3,  q = l0 - l1 l2 / 3 + 2 l2^3 / 27
    Rational p = l1 - l2 * l2 / Rational(3);
    Rational q = l0 - l1 * l2 / Rational(3) + Rational(2) * l2 * l2 * l2 / Rational(27);
    d.g2 = Rational(-4) * p;
    d.g3 = Rational(-4) * q;
    // verify symbolically: 4 f(X - shift) - (4X^3 - g2 X - g3) == 0
    MultiPoly X = MultiPoly::variable(Var::X);
    MultiPoly shifted = X - MultiPoly::constant(d.shift);
    MultiPoly f = shifted.pow(3) + shifted.pow(2).scaled(l2) + shifted.scaled(l1) +
                  MultiPoly::constant(l0);
    MultiPoly rhs = X.pow(3).scaled(Rational(4)) - X.scaled(d.g2) - MultiPoly::constant(d.g3);
    d.verified = (f.scaled(Rational(4)) - rhs).is_zero();
    return d;
}

Weierstrass::Weierstrass(Complex g2, Complex g3, AnalyticConfig cfg) : g2_(g2), g3_(g3) {
    const std::size_t K = std::max<std::size_t>(cfg.series_terms, 8);
    c_.assign(K + 1, Complex(0.0));
    if (K >= 2) c_[2] = g2 / 20.0;
    if (K >= 3) c_[3] = g3 / 28.0;
    for (std::size_t k = 4; k <= K; ++k) {
        Complex acc(0.0);
        for (std::size_t m = 2; m + 2 <= k; ++m) acc += c_[m] * c_[k - m];
        c_[k] = acc * (3.0 / ((2.0 * k + 1.0) * (k - 3.0)));
    }
    // Root-test radius estimate: |c_k|^(1/2k) -> 1/radius. The ratio test
    // fails on lattices where alternating coefficients vanish (g3 = 0), the
    // root test does not.
    double radius = std::numeric_limits<double>::infinity();
    for (std::size_t k = K / 2; k <= K; ++k) {
        double a = std::abs(c_[k]);
        if (a > 0) radius = std::min(radius, std::pow(a, -1.0 / (2.0 * k)));
    }
    if (!std::isfinite(radius)) radius = 1e6; // g2 = g3 = 0: series is exact
    u_max_ = cfg.radius_fraction * radius;
}

Weierstrass Weierstrass::from_curve(const EllipticCurve &c, AnalyticConfig cfg) {
    DepressedForm d = depress(c);
    if (!d.verified) throw InternalError("Weierstrass: depression map failed to verify");
    return Weierstrass(Complex(d.g2.to_double()), Complex(d.g3.to_double()), cfg);
}

void Weierstrass::check_domain(Complex u, bool allow_zero) const {
    double a = std::abs(u);
    if (!allow_zero && a == 0.0) throw DomainError("Weierstrass: u = 0");
    if (a > u_max_) throw DomainError("Weierstrass: |u| beyond the series guard radius");
}

Complex Weierstrass::wp(Complex u) const {
    check_domain(u, false);
    Complex u2 = u * u;
    Complex acc(0.0);
    Complex upow = u2; // u^(2k-2) starting at k = 2
    for (std::size_t k = 2; k < c_.size(); ++k) {
        acc += c_[k] * upow;
        upow *= u2;
    }
    return 1.0 / u2 + acc;
}

Complex Weierstrass::wp_prime(Complex u) const {
    check_domain(u, false);
    Complex u2 = u * u;
    Complex acc(0.0);
    Complex upow = u; // u^(2k-3) starting at k = 2
    for (std::size_t k = 2; k < c_.size(); ++k) {
        acc += (2.0 * k - 2.0) * c_[k] * upow;
        upow *= u2;
    }
    return -2.0 / (u2 * u) + acc;
}

Complex Weierstrass::sigma(Complex u) const {
    check_domain(u, true);
    Complex u2 = u * u;
    Complex acc(0.0);
    Complex upow = u2 * u2; // u^(2k) starting at k = 2
    for (std::size_t k = 2; k < c_.size(); ++k) {
        acc += c_[k] * upow / (2.0 * k * (2.0 * k - 1.0));
        upow *= u2;
    }
    return u * std::exp(-acc);
}

double Weierstrass::ode_residual(Complex u) const {
    Complex p = wp(u), dp = wp_prime(u);
    Complex rhs = 4.0 * p * p * p - g2_ * p - g3_;
    double scale = std::max(1.0, std::abs(rhs)); // relative: |wp|^3 dwarfs epsilon near the pole
    return std::abs(dp * dp - rhs) / scale;
}

double check_add1(const Weierstrass &w, Complex u, Complex v) {
    Complex lhs = -(w.wp(u) - w.wp(v));
    Complex su = w.sigma(u), sv = w.sigma(v);
    Complex rhs = w.sigma(v + u) * w.sigma(u - v) / ((sv * su) * (sv * su));
    double scale = std::max(1.0, std::abs(lhs));
    return std::abs(lhs - rhs) / scale;
}

ContinuousTodaResult check_continuous_toda(const Weierstrass &w, const ContinuousTodaProbe &probe) {
    ContinuousTodaResult res;
    const Complex b = w.wp(probe.u0);
    const double h = probe.h;
    auto wval = [&](int n, Complex t) { return w.wp((double(n) + 1.0) * probe.u0 + t) - b; };
    for (int n = probe.n_lo; n <= probe.n_hi; ++n) {
        ContinuousTodaResult::Row row{n, 0.0, false};
        try {
            Complex w0 = wval(n, probe.t), wp_ = wval(n, probe.t + h), wm_ = wval(n, probe.t - h);
            // singular probe: wp at a pole or the log of a near-zero
            if (std::abs(w0) < 1e-12) throw DomainError("near-zero log");
            // q(t+h) - 2q(t) + q(t-h) as log of ratios near 1, so the branch
            // of the logarithm cannot jump inside the stencil
            Complex second = std::log(wp_ / w0) + std::log(wm_ / w0);
            Complex lhs = -second / (h * h);
            Complex rhs = wval(n + 1, probe.t) - 2.0 * w0 + wval(n - 1, probe.t);
            row.residual = std::abs(lhs - rhs);
            res.max_residual = std::max(res.max_residual, row.residual);
            ++res.checked;
        } catch (const Error &) {
            row.skipped = true;
        }
        res.rows.push_back(row);
    }
    return res;
}

} // namespace psitoda
