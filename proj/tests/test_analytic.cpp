#include <doctest.h>

#include <random>

#include "psitoda/analytic.hpp"
#include "psitoda/reference_data.hpp"

using namespace psitoda;

namespace {
// y^2 = x^3 - x: g2 = 4, g3 = 0, the standard lemniscatic test curve
Weierstrass lemniscatic() { return Weierstrass::from_curve(ref_curve(RefCurveId::A2)); }
} // namespace

TEST_CASE("depression map is exact and symbolically verified") {
    DepressedForm d2 = depress(ref_curve(RefCurveId::A2));
    CHECK(d2.g2 == Rational(4));
    CHECK(d2.g3 == Rational(0));
    CHECK(d2.verified);

    DepressedForm d1 = depress(ref_curve(RefCurveId::A1));
    CHECK(d1.g2 == Rational(0));
    CHECK(d1.g3 == Rational(-1));
    CHECK(d1.verified);

    DepressedForm d3 = depress(ref_curve(RefCurveId::A3));
    CHECK(d3.shift == Rational(1, 12));
    CHECK(d3.verified);
    // nodal: zero discriminant
    Weierstrass w3(Complex(d3.g2.to_double()), Complex(d3.g3.to_double()));
    CHECK(std::abs(w3.discriminant()) < 1e-12);
}

TEST_CASE("wp principal part and domain guard") {
    Weierstrass w = lemniscatic();
    CHECK(w.u_max() > 0.5); // lemniscatic radius is about 2.6, guard at half
    Complex u(1e-4, 0);
    CHECK(std::abs(w.wp(u) * (u * u) - 1.0) < 1e-6);
    CHECK_THROWS_AS(w.wp(Complex(0.0)), DomainError);
    CHECK_THROWS_AS(w.wp(Complex(100.0)), DomainError);
}

TEST_CASE("g2 = g3 = 0 collapses wp to the bare pole") {
    Weierstrass w(Complex(0.0), Complex(0.0));
    Complex u(0.37, 0.11);
    CHECK(std::abs(w.wp(u) - 1.0 / (u * u)) < 1e-14);
    CHECK(std::abs(w.sigma(u) - u) < 1e-14);
}

TEST_CASE("defining ODE residual stays tiny on random admissible points") {
    Weierstrass w = lemniscatic();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        Complex u(unif(rng), unif(rng));
        u *= 0.4 * w.u_max();
        if (std::abs(u) < 1e-2) continue;
        CHECK(w.ode_residual(u) < 1e-10);
    }
}

TEST_CASE("sigma normalization and oddness") {
    Weierstrass w = lemniscatic();
    Complex u(1e-5, 2e-6);
    CHECK(std::abs(w.sigma(u) / u - 1.0) < 1e-9);
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        Complex v(unif(rng), unif(rng));
        v *= 0.4 * w.u_max();
        CHECK(std::abs(w.sigma(-v) + w.sigma(v)) < 1e-12);
    }
}

TEST_CASE("-(log sigma)'' equals wp numerically") {
    Weierstrass w = lemniscatic();
    const double h = 1e-4;
    for (Complex u : {Complex(0.4, 0.1), Complex(-0.3, 0.25), Complex(0.2, -0.35)}) {
        auto ls = [&](Complex z) { return std::log(w.sigma(z)); };
        Complex second = (ls(u + h) - 2.0 * ls(u) + ls(u - h)) / (h * h);
        CHECK(std::abs(-second - w.wp(u)) < 1e-6);
    }
}

TEST_CASE("addition formula residual on 50 random pairs") {
    Weierstrass w = lemniscatic();
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int accepted = 0;
    while (accepted < 50) {
        Complex u(unif(rng), unif(rng)), v(unif(rng), unif(rng));
        u *= 0.35 * w.u_max();
        v *= 0.35 * w.u_max();
        if (std::abs(u) < 1e-2 || std::abs(v) < 1e-2) continue;
        if (std::abs(u - v) < 1e-2 || std::abs(u + v) < 1e-2) continue;
        CHECK(check_add1(w, u, v) < 1e-9);
        ++accepted;
    }
}

TEST_CASE("addition formula antisymmetry under u <-> v") {
    Weierstrass w = lemniscatic();
    Complex u(0.5, 0.1), v(0.2, -0.3);
    auto rhs = [&](Complex a, Complex b) {
        return w.sigma(b + a) * w.sigma(a - b) / std::pow(w.sigma(b) * w.sigma(a), 2.0);
    };
    CHECK(std::abs(rhs(u, v) + rhs(v, u)) < 1e-9 * std::abs(rhs(u, v)));
}

TEST_CASE("continuous Toda residual and its quadratic decay") {
    Weierstrass w = lemniscatic();
    ContinuousTodaProbe probe;
    probe.u0 = Complex(0.3, 0.0);
    probe.t = Complex(0.0, 0.45); // all q_n singularities at distance >= 0.45
    probe.n_lo = -1;
    probe.n_hi = 1;
    probe.h = 1e-3;
    ContinuousTodaResult r = check_continuous_toda(w, probe);
    CHECK(r.checked == 3);
    CHECK(r.max_residual < 1e-4);

    probe.h = 2e-3;
    ContinuousTodaResult r2 = check_continuous_toda(w, probe);
    const double ratio = r2.max_residual / r.max_residual;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("a probe hugging the log singularities keeps O(h^2) but a large constant") {
    // t = 0.05i sits 0.05 from the q_{-1} and q_0 singularities; the stencil
    // error constant q''''/12 ~ 6/(12 |t|^4) makes those rows ~0.1 while the
    // well-separated n = 1 row is still ~5e-5. The decay stays quadratic.
    Weierstrass w = lemniscatic();
    ContinuousTodaProbe probe;
    probe.u0 = Complex(0.3, 0.0);
    probe.t = Complex(0.0, 0.05);
    probe.n_lo = 1;
    probe.n_hi = 1;
    probe.h = 1e-3;
    ContinuousTodaResult r1 = check_continuous_toda(w, probe);
    CHECK(r1.max_residual < 1e-4);

    probe.n_lo = -1;
    ContinuousTodaResult rall = check_continuous_toda(w, probe);
    CHECK(rall.max_residual > 1e-2); // the ill-conditioned rows
    probe.h = 2e-3;
    ContinuousTodaResult rall2 = check_continuous_toda(w, probe);
    const double ratio = rall2.max_residual / rall.max_residual;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("e^{q_n} reproduces wp((n+1)u0 + t) - b by construction") {
    Weierstrass w = lemniscatic();
    Complex u0(0.3, 0.0), t(0.0, 0.05), b = w.wp(u0);
    for (int n = -1; n <= 1; ++n) {
        Complex q = std::log(w.wp((double(n) + 1.0) * u0 + t) - b);
        CHECK(std::abs(std::exp(q) - (w.wp((double(n) + 1.0) * u0 + t) - b)) < 1e-12);
    }
}

TEST_CASE("singular probes are skipped with a note") {
    Weierstrass w = lemniscatic();
    ContinuousTodaProbe probe;
    probe.u0 = Complex(0.3, 0.0);
    probe.t = Complex(0.0, 0.0); // n = -1 puts the wp argument at the pole
    probe.n_lo = -1;
    probe.n_hi = 0;
    ContinuousTodaResult r = check_continuous_toda(w, probe);
    bool any_skipped = false;
    for (const auto &row : r.rows) any_skipped = any_skipped || row.skipped;
    CHECK(any_skipped);
}

TEST_CASE("series self-consistency at |u| = u_max/4") {
    // the two sides are ~5.6e3 there, so an absolute 1e-12 would demand
    // sub-epsilon doubles; the relative residual is what double precision
    // can promise and it comes out ~6e-16
    Weierstrass w = lemniscatic();
    Complex u = Complex(0.25, 0.0) * w.u_max();
    CHECK(w.ode_residual(u) < 1e-12);
}

TEST_CASE("degenerate addition-formula input u = v gives both sides zero") {
    Weierstrass w = lemniscatic();
    Complex u(0.4, 0.2);
    CHECK(check_add1(w, u, u) < 1e-12);
}
