#include <doctest.h>

#include "psitoda/curve.hpp"
#include "psitoda/reference_data.hpp"
#include "testutil.hpp"

using namespace psitoda;

TEST_CASE("defining relation y*y = f") {
    EllipticCurve c = EllipticCurve::symbolic();
    CurveElement y = CurveElement::y(c);
    CurveElement yy = y * y;
    CHECK(yy.q_part().is_zero());
    CHECK(yy.p_part() == c.f());
    CHECK(CurveElement::one(c) * y == y);
}

TEST_CASE("psi2 squared is 4f") {
    EllipticCurve c = ref_curve(RefCurveId::A1);
    CurveElement psi2 = CurveElement::y(c).scaled(Rational(-2));
    CurveElement sq = psi2 * psi2;
    CHECK(sq.q_part().is_zero());
    CHECK(sq.p_part() == c.f().scaled(Rational(4)));
}

TEST_CASE("reduction of y powers is canonical and idempotent") {
    EllipticCurve c(Rational(1, 4), Rational(0), Rational(0));
    // y^4 + x y^2 + y + 1 -> f^2 + x f + 1 + y
    std::vector<MultiPoly> coeffs = {MultiPoly::constant(Rational(1)),
                                     MultiPoly::constant(Rational(1)),
                                     MultiPoly::variable(Var::X), {},
                                     MultiPoly::constant(Rational(1))};
    CurveElement e = CurveElement::from_y_powers(c, coeffs);
    MultiPoly f = c.f();
    CHECK(e.p_part() == f * f + MultiPoly::variable(Var::X) * f + MultiPoly::constant(Rational(1)));
    CHECK(e.q_part() == MultiPoly::constant(Rational(1)));
    // re-reducing the canonical parts changes nothing
    CurveElement again = CurveElement::from_y_powers(c, {e.p_part(), e.q_part()});
    CHECK(again == e);
}

TEST_CASE("derivation: D(x) = 2y, D(y) = f', D(const) = 0, Leibniz") {
    EllipticCurve c = EllipticCurve::symbolic();
    CurveElement x = CurveElement::x(c), y = CurveElement::y(c);
    CHECK(x.derivation() == y.scaled(Rational(2)));
    CurveElement dy = y.derivation();
    CHECK(dy.q_part().is_zero());
    CHECK(dy.p_part() == c.f().derivative(Var::X));
    CHECK(CurveElement::constant(c, Rational(5)).derivation().is_zero());
    // D annihilates the defining relation
    CHECK((y * y).derivation() == CurveElement::from_parts(c, c.f(), {}).derivation());

    testutil::Rng rng(3);
    for (int k = 0; k < 30; ++k) {
        EllipticCurve cn = testutil::rand_curve(rng);
        CurveElement a = testutil::rand_element(rng, cn, 3);
        CurveElement b = testutil::rand_element(rng, cn, 3);
        CHECK((a * b).derivation() == a.derivation() * b + a * b.derivation());
    }
}

TEST_CASE("point construction checks y0^2 = f(x0) exactly") {
    EllipticCurve c = ref_curve(RefCurveId::A3); // y^2 = x^2 (x + 1/4)
    // x = -1: f = -3/4
    CHECK_NOTHROW(PointValue(c, Rational(-1), QuadExt::theta(Rational(-3, 4))));
    CHECK_THROWS_AS(PointValue(c, Rational(-1), QuadExt::theta(Rational(3, 4))), DomainError);
    CHECK_THROWS_AS(PointValue(c, Rational(-1), QuadExt(Rational(1))), DomainError);
    // rational y0 on A1 at x = 0: f = 1/4, y0 = 1/2
    EllipticCurve a1 = ref_curve(RefCurveId::A1);
    CHECK_NOTHROW(PointValue(a1, Rational(0), QuadExt(Rational(1, 2))));
}

TEST_CASE("evaluation examples at the 6-cyclic point") {
    EllipticCurve c = ref_curve(RefCurveId::A3);
    PointValue pt = table1_point();
    PsiSequence seq = PsiSequence::canonical(c);
    // psi3 = x^3 (1 + 3x) evaluates to 2
    CHECK(element_eval(seq.psi(3), pt) == QuadExt(Rational(2)));
    // psi2 = -2y evaluates to -sqrt(-3) on the fixed branch
    CHECK(element_eval(seq.psi(2), pt) == QuadExt(Rational(0), Rational(-2), Rational(-3, 4)));
    CHECK(element_eval(CurveElement::one(c), pt) == QuadExt(Rational(1)));
}

TEST_CASE("evaluation is a ring homomorphism") {
    testutil::Rng rng(5);
    for (int k = 0; k < 40; ++k) {
        EllipticCurve c = testutil::rand_curve(rng);
        PointValue pt = testutil::rand_point(rng, c);
        CurveElement a = testutil::rand_element(rng, c, 3);
        CurveElement b = testutil::rand_element(rng, c, 3);
        CHECK(element_eval(a * b, pt) == element_eval(a, pt) * element_eval(b, pt));
        CHECK(element_eval(a + b, pt) == element_eval(a, pt) + element_eval(b, pt));
    }
}

TEST_CASE("symbolic lambdas refuse numeric evaluation") {
    EllipticCurve sym = EllipticCurve::symbolic();
    EllipticCurve num = ref_curve(RefCurveId::A1);
    CurveElement e = CurveElement::from_parts(num, MultiPoly::variable(Var::L0), {});
    PointValue pt(num, Rational(0), QuadExt(Rational(1, 2)));
    // an element carrying an unbound coefficient variable cannot be evaluated
    CHECK_THROWS_AS(element_eval(CurveElement::x(sym), pt), DomainError);
    CHECK(element_eval(e, pt) == QuadExt(Rational(1, 4))); // bound by the curve
}

TEST_CASE("branch point and nodal bookkeeping") {
    EllipticCurve a3 = ref_curve(RefCurveId::A3);
    CHECK(a3.is_nodal());
    auto roots = a3.branch_points();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<Rational, int>{Rational(-1, 4), 1});
    CHECK(roots[1] == std::pair<Rational, int>{Rational(0), 2});
    EllipticCurve a1 = ref_curve(RefCurveId::A1);
    CHECK(!a1.is_nodal());
    CHECK(a1.branch_points().empty()); // irreducible cubic, no rational roots
    EllipticCurve a2 = ref_curve(RefCurveId::A2);
    CHECK(!a2.is_nodal());
    CHECK(a2.branch_points().size() == 3);
}

TEST_CASE("mixed curves are rejected") {
    EllipticCurve a(Rational(0), Rational(1), Rational(0));
    EllipticCurve b(Rational(0), Rational(2), Rational(0));
    CHECK_THROWS_AS(CurveElement::x(a) + CurveElement::x(b), DomainError);
}
