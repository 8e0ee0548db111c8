#ifndef PSITODA_ANALYTIC_HPP
#define PSITODA_ANALYTIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "psitoda/curve.hpp"

namespace psitoda {

using Complex = std::complex<double>;

/// Exact depressed form of a numeric curve: the shift x = X - l2/3 and the
/// doubling ybar = 2y send y^2 = f(x) to ybar^2 = 4X^3 - g2 X - g3.
struct DepressedForm {
    Rational g2, g3;
    Rational shift; // l2/3
    bool verified;  // symbolic identity 4 f(X - shift) == 4X^3 - g2 X - g3
};
DepressedForm depress(const EllipticCurve &c);

struct AnalyticConfig {
    std::size_t series_terms = 60; // Laurent coefficients c_k kept
    double radius_fraction = 0.5;  // u_max = fraction * estimated radius
};

/// Floating-point Weierstrass functions from the invariants (g2, g3),
/// via the Laurent series of wp about 0 (coefficients from the standard
/// quadratic recurrence) and the bootstrap
///   sigma(u) = u * exp(-sum_k c_k u^{2k} / (2k (2k-1))).
/// Valid inside |u| <= u_max (a fraction of the estimated series radius).
class Weierstrass {
  public:
    Weierstrass(Complex g2, Complex g3, AnalyticConfig cfg = {});
    static Weierstrass from_curve(const EllipticCurve &c, AnalyticConfig cfg = {});

    Complex g2() const { return g2_; }
    Complex g3() const { return g3_; }
    Complex discriminant() const { return g2_ * g2_ * g2_ - 27.0 * g3_ * g3_; }
    double u_max() const { return u_max_; }

    Complex wp(Complex u) const;
    Complex wp_prime(Complex u) const;
    Complex sigma(Complex u) const;

    /// |(wp')^2 - (4 wp^3 - g2 wp - g3)| at u, the defining ODE residual.
    double ode_residual(Complex u) const;

  private:
    void check_domain(Complex u, bool allow_zero) const;
    Complex g2_, g3_;
    std::vector<Complex> c_; // c_[k] for k >= 2, wp = u^-2 + sum c_k u^{2k-2}
    double u_max_;
};

/// Relative residual of
///   -[wp(u) - wp(v)] = sigma(v+u) sigma(u-v) / (sigma(v) sigma(u))^2.
double check_add1(const Weierstrass &w, Complex u, Complex v);

struct ContinuousTodaProbe {
    Complex u0;
    Complex t;
    int n_lo = -1, n_hi = 1;
    double h = 1e-3;
};

struct ContinuousTodaResult {
    struct Row {
        int n;
        double residual;
        bool skipped; // singular probe (wp pole or log of ~0)
    };
    std::vector<Row> rows;
    double max_residual = 0.0;
    std::size_t checked = 0;
};

/// Central-difference check of -(d^2/dt^2) q_n = e^{q_{n+1}} - 2 e^{q_n} + e^{q_{n-1}}
/// with q_n = log[wp((n+1) u0 + t) - b], b = wp(u0).
ContinuousTodaResult check_continuous_toda(const Weierstrass &w, const ContinuousTodaProbe &probe);

} // namespace psitoda

#endif
